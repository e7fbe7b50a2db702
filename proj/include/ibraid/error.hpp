#pragma once

#include <stdexcept>
#include <string>

namespace ibraid {

enum class Err {
  Input,              // malformed data, index out of range, kind mismatch
  Parse,              // coefficient / file syntax errors
  NotInvertible,      // singular element in an algebra
  NotConvInvertible,  // form has no convolution inverse
  TriangularRequired, // operation defined only for triangular structures
  NotBialgebraMap,    // map fails algebra/coalgebra compatibility
  NotSurjective,
  ResourceCap,        // configurable dimension/degree cap exceeded
  UnknownBuiltin,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err k, const std::string& msg) { throw Error(k, msg); }

}  // namespace ibraid
