#pragma once

#include <gmp.h>

#include <string>

#include "stirlab/precision.hpp"

namespace stirlab {

// Exact rational, canonical lowest terms. Used for every formula constant so
// that constants never cap the accuracy of an evaluation.
class Rat {
 public:
  Rat() { mpq_init(q_); }  // zero
  Rat(long num, unsigned long den) {
    mpq_init(q_);
    mpq_set_si(q_, num, den);
    mpq_canonicalize(q_);
  }

  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  // Parses "p/q" or "p" (optionally signed). Throws DomainError on malformed
  // input or a zero denominator.
  static Rat parse(const std::string& s);

  // Canonical form: "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rat operator+(const Rat& o) const {
    Rat r;
    mpq_add(r.q_, q_, o.q_);
    return r;
  }
  Rat operator-(const Rat& o) const {
    Rat r;
    mpq_sub(r.q_, q_, o.q_);
    return r;
  }

  bool operator==(const Rat& o) const { return mpq_equal(q_, o.q_) != 0; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  int cmp(const Rat& o) const { return mpq_cmp(q_, o.q_); }
  int sign() const { return mpq_sgn(q_); }

  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

}  // namespace stirlab
