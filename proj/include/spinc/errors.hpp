#pragma once

#include <stdexcept>
#include <string>

namespace spinc {

/// Operands whose shapes or signatures do not fit together.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A signature with p + q = 0 (or negative counts).
class InvalidSignature : public std::invalid_argument {
 public:
  explicit InvalidSignature(const std::string& what) : std::invalid_argument(what) {}
};

/// Parameters outside the domain of a construction (e.g. p' + q' = 0).
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// An input that violates a stated invariant (e.g. not metric-antisymmetric).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class UnsupportedSpec : public std::invalid_argument {
 public:
  explicit UnsupportedSpec(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace spinc
