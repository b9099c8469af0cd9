#pragma once

#include <stdexcept>
#include <string>

namespace stirlab {

// How results are certified before being handed back to the caller.
enum class Validation {
  none,               // single evaluation, no cross-check
  precision_doubling  // accept only if recomputation at +64 bits agrees
};

class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when the adaptive precision policy cannot certify a result to the
// requested tolerance; callers never receive a silently wrong value.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Working-precision contract shared by every numeric operation. `bits` is the
// mantissa precision of delivered values; `guard_bits` is slack beyond the
// requested accuracy (relative tolerance 2^-(bits - guard_bits)), used both as
// internal headroom and as the acceptance threshold under validation.
struct PrecisionContext {
  long bits = 384;
  Validation validation = Validation::precision_doubling;
  long guard_bits = 64;

  PrecisionContext() = default;
  PrecisionContext(long b, Validation v = Validation::precision_doubling,
                   long g = 64)
      : bits(b), validation(v), guard_bits(g) {
    check();
  }

  void check() const {
    if (bits < 128) {
      throw DomainError("PrecisionContext: bits must be >= 128, got " +
                        std::to_string(bits));
    }
    if (guard_bits < 0) {
      throw DomainError("PrecisionContext: guard_bits must be >= 0");
    }
    if (guard_bits >= bits) {
      throw DomainError("PrecisionContext: guard_bits must be < bits");
    }
  }

  // Relative tolerance a certified result must meet: 2^-(bits - guard_bits).
  long certified_bits() const { return bits - guard_bits; }
};

}  // namespace stirlab
