#pragma once

#include <stdexcept>
#include <string>

namespace rectlay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// geometry
class OverlapError : public Error { public: using Error::Error; };
class CoverageError : public Error { public: using Error::Error; };
class DuplicateIdError : public Error { public: using Error::Error; };
class NongenericError : public Error { public: using Error::Error; };

// dualgraph
class EmbeddingError : public Error { public: using Error::Error; };
class DisconnectedError : public Error { public: using Error::Error; };
class NotBiconnectedError : public Error { public: using Error::Error; };
class SizeLimitError : public Error { public: using Error::Error; };

// classify / realize
class NotSliceableError : public Error { public: using Error::Error; };

// transversal
class InvalidCycleError : public Error { public: using Error::Error; };

// recognize
class NotCutVertexError : public Error { public: using Error::Error; };
class CutVertexError : public Error { public: using Error::Error; };
class NotOuterError : public Error { public: using Error::Error; };
class MoreThanTwoComponentsError : public Error { public: using Error::Error; };
class InvalidInputError : public Error { public: using Error::Error; };
class InternalVerificationError : public Error { public: using Error::Error; };

// enumerate / cli
class CapError : public Error { public: using Error::Error; };

}  // namespace rectlay
