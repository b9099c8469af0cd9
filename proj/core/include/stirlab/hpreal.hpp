#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "stirlab/bignat.hpp"
#include "stirlab/precision.hpp"
#include "stirlab/rational.hpp"

namespace stirlab {

// Arbitrary-precision real value with an explicit mantissa precision in bits.
// Every operation rounds to nearest at the precision of its result value
// (the widest operand for binary ops), so each single step is correctly
// rounded to within half an ulp; composite routines gain accuracy by
// evaluating at elevated precision and rounding once at the end.
class HPReal {
 public:
  // Default: NaN at the minimum contract precision; meant to be overwritten.
  HPReal() { mpfr_init2(v_, 128); }
  explicit HPReal(long prec_bits) { mpfr_init2(v_, clamp(prec_bits)); }

  HPReal(const HPReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  HPReal(HPReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  HPReal& operator=(const HPReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  HPReal& operator=(HPReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~HPReal() { mpfr_clear(v_); }

  long precision_bits() const { return mpfr_get_prec(v_); }

  // ---- constructors from exact values (conversion rounds to prec_bits) ----
  static HPReal of_ui(unsigned long v, long prec_bits);
  static HPReal of_si(long v, long prec_bits);
  static HPReal of_rat(const Rat& q, long prec_bits);
  static HPReal of_bignat(const BigNat& v, long prec_bits);
  // Parses decimal scientific notation (as produced by to_decimal).
  static HPReal of_decimal(const std::string& s, long prec_bits);

  // ---- constants at a given precision ----
  static HPReal pi(long prec_bits);
  static HPReal ln2(long prec_bits);
  static HPReal euler_e(long prec_bits);

  // Same value re-rounded to a different precision. Raising the precision is
  // lossless; lowering rounds to nearest.
  HPReal at(long prec_bits) const {
    HPReal r(prec_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  // ---- arithmetic: result at the widest operand precision ----
  friend HPReal operator+(const HPReal& a, const HPReal& b) {
    HPReal r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend HPReal operator-(const HPReal& a, const HPReal& b) {
    HPReal r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend HPReal operator*(const HPReal& a, const HPReal& b) {
    HPReal r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend HPReal operator/(const HPReal& a, const HPReal& b) {
    HPReal r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  HPReal operator-() const {
    HPReal r(precision_bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  HPReal& operator+=(const HPReal& o) { return *this = *this + o; }
  HPReal& operator-=(const HPReal& o) { return *this = *this - o; }
  HPReal& operator*=(const HPReal& o) { return *this = *this * o; }
  HPReal& operator/=(const HPReal& o) { return *this = *this / o; }

  // ---- elementary functions, correctly rounded at the argument precision ----
  static HPReal exp(const HPReal& x);
  static HPReal expm1(const HPReal& x);
  static HPReal ln(const HPReal& x);     // domain error for x <= 0
  static HPReal log1p(const HPReal& x);  // domain error for x <= -1
  static HPReal sinh(const HPReal& x);
  static HPReal sqrt(const HPReal& x);  // domain error for x < 0
  static HPReal pow(const HPReal& base, const HPReal& expo);
  static HPReal abs(const HPReal& x);

  // ---- queries ----
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  int cmp(const HPReal& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp(const Rat& q) const { return mpfr_cmp_q(v_, q.raw()); }
  bool operator<(const HPReal& o) const { return cmp(o) < 0; }
  bool operator>(const HPReal& o) const { return cmp(o) > 0; }
  bool operator==(const HPReal& o) const { return mpfr_equal_p(v_, o.v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Binary exponent e with 2^(e-1) <= |v| < 2^e; 0 for zero/NaN.
  long exponent2() const {
    return (is_zero() || is_nan()) ? 0 : static_cast<long>(mpfr_get_exp(v_));
  }

  // Decimal scientific notation "[-]d.ddd...e<k>". sig_digits = 0 emits
  // enough digits to reconstruct the value exactly at this precision
  // (lossless round trip); otherwise rounds to sig_digits significant digits.
  std::string to_decimal(long sig_digits = 0) const;

  // Distance |a - b| measured in ulps of the wider-magnitude operand at
  // precision `bits`. Returns 0 for exactly equal values and +inf if either
  // is NaN.
  static double ulps_apart(const HPReal& a, const HPReal& b, long bits);

  // Relative agreement check: |a - b| <= 2^-rel_bits * max(|a|, |b|).
  // Exact equality (including both zero) passes.
  static bool agree_to(const HPReal& a, const HPReal& b, long rel_bits);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  static long clamp(long p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
  static long wider(const HPReal& a, const HPReal& b) {
    return a.precision_bits() > b.precision_bits() ? a.precision_bits()
                                                   : b.precision_bits();
  }
  mpfr_t v_;
};

}  // namespace stirlab
