#pragma once

#include <string>

#include "rectlay/classify.hpp"
#include "rectlay/dualgraph.hpp"
#include "rectlay/geometry.hpp"
#include "rectlay/realize.hpp"
#include "rectlay/recognize.hpp"
#include "rectlay/transversal.hpp"

namespace rectlay {

/// Serialization of the documented file formats. Rationals are written as
/// decimal-integer strings or "p/q"; both forms are accepted on input.
/// Parsers throw InvalidInputError on malformed documents.

std::string layout_to_json(const Layout& layout);
Layout layout_from_json(const std::string& text);

std::string plane_graph_to_json(const PlaneGraph& g);
PlaneGraph plane_graph_from_json(const std::string& text);

std::string slicing_tree_to_json(const SlicingTree& t);
SlicingTree slicing_tree_from_json(const std::string& text);

std::string assignment_to_json(const AspectAssignment& a);
AspectAssignment assignment_from_json(const std::string& text);

std::string transversal_to_json(const TransversalStructure& ts);

std::string realization_report_to_json(const RealizationReport& report);

std::string recognition_to_json(const CornerLabeledLayout& result);

}  // namespace rectlay
