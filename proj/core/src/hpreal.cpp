#include "stirlab/hpreal.hpp"

#include <cmath>
#include <limits>
#include <memory>

namespace stirlab {

HPReal HPReal::of_ui(unsigned long v, long prec_bits) {
  HPReal r(prec_bits);
  mpfr_set_ui(r.v_, v, MPFR_RNDN);
  return r;
}

HPReal HPReal::of_si(long v, long prec_bits) {
  HPReal r(prec_bits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

HPReal HPReal::of_rat(const Rat& q, long prec_bits) {
  HPReal r(prec_bits);
  mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
  return r;
}

HPReal HPReal::of_bignat(const BigNat& v, long prec_bits) {
  HPReal r(prec_bits);
  mpfr_set_z(r.v_, v.raw(), MPFR_RNDN);
  return r;
}

HPReal HPReal::of_decimal(const std::string& s, long prec_bits) {
  HPReal r(prec_bits);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("HPReal: unparsable decimal literal: '" + s + "'");
  }
  return r;
}

HPReal HPReal::pi(long prec_bits) {
  HPReal r(prec_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::ln2(long prec_bits) {
  HPReal r(prec_bits);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::euler_e(long prec_bits) {
  HPReal r(prec_bits);
  mpfr_set_ui(r.v_, 1, MPFR_RNDN);
  mpfr_exp(r.v_, r.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::exp(const HPReal& x) {
  HPReal r(x.precision_bits());
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::expm1(const HPReal& x) {
  HPReal r(x.precision_bits());
  mpfr_expm1(r.v_, x.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::ln(const HPReal& x) {
  if (x.is_nan() || x.sign() <= 0) {
    throw DomainError("HPReal::ln: argument must be > 0");
  }
  HPReal r(x.precision_bits());
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::log1p(const HPReal& x) {
  if (x.is_nan() || x.cmp(HPReal::of_si(-1, x.precision_bits())) <= 0) {
    throw DomainError("HPReal::log1p: argument must be > -1");
  }
  HPReal r(x.precision_bits());
  mpfr_log1p(r.v_, x.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::sinh(const HPReal& x) {
  HPReal r(x.precision_bits());
  mpfr_sinh(r.v_, x.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::sqrt(const HPReal& x) {
  if (x.is_nan() || x.sign() < 0) {
    throw DomainError("HPReal::sqrt: argument must be >= 0");
  }
  HPReal r(x.precision_bits());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::pow(const HPReal& base, const HPReal& expo) {
  HPReal r(wider(base, expo));
  mpfr_pow(r.v_, base.v_, expo.v_, MPFR_RNDN);
  return r;
}

HPReal HPReal::abs(const HPReal& x) {
  HPReal r(x.precision_bits());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

std::string HPReal::to_decimal(long sig_digits) const {
  if (is_nan()) return "nan";
  if (is_zero()) return "0";
  long digits = sig_digits;
  if (digits <= 0) {
    // Enough decimal digits for a lossless round trip at this precision.
    digits = static_cast<long>(
                 std::ceil(static_cast<double>(precision_bits()) * 0.30103)) +
             2;
  }
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_,
                         MPFR_RNDN);
  if (s == nullptr) throw FormatError("HPReal::to_decimal: conversion failed");
  std::string digits_str(s);
  mpfr_free_str(s);
  std::string out;
  size_t i = 0;
  if (digits_str[0] == '-') {
    out += '-';
    i = 1;
  }
  out += digits_str[i];
  if (digits_str.size() > i + 1) {
    out += '.';
    out += digits_str.substr(i + 1);
  }
  // mpfr's exponent is for 0.ddd... form; shift by one for d.ddd... form.
  out += 'e';
  out += std::to_string(static_cast<long>(e) - 1);
  return out;
}

double HPReal::ulps_apart(const HPReal& a, const HPReal& b, long bits) {
  if (a.is_nan() || b.is_nan()) {
    return std::numeric_limits<double>::infinity();
  }
  if (mpfr_equal_p(a.v_, b.v_)) return 0.0;
  long p = bits;
  HPReal d = abs(a.at(p + 64) - b.at(p + 64));
  const HPReal& m =
      (mpfr_cmpabs(a.v_, b.v_) >= 0) ? a : b;  // wider-magnitude operand
  if (m.is_zero()) return std::numeric_limits<double>::infinity();
  // ulp at precision p for a value with binary exponent e is 2^(e - p).
  long ulp_exp = m.exponent2() - p;
  HPReal ratio(64);
  mpfr_mul_2si(ratio.v_, d.v_, -ulp_exp, MPFR_RNDN);
  return ratio.to_double();
}

bool HPReal::agree_to(const HPReal& a, const HPReal& b, long rel_bits) {
  if (a.is_nan() || b.is_nan()) return false;
  if (mpfr_equal_p(a.v_, b.v_)) return true;
  if (a.is_zero() || b.is_zero()) return false;  // one zero, one not
  long p = wider(a, b) + 64;
  HPReal d = abs(a.at(p) - b.at(p));
  const HPReal& m = (mpfr_cmpabs(a.v_, b.v_) >= 0) ? a : b;
  HPReal bound(p);
  mpfr_abs(bound.v_, m.v_, MPFR_RNDN);
  mpfr_mul_2si(bound.v_, bound.v_, -rel_bits, MPFR_RNDN);
  return mpfr_cmp(d.raw(), bound.raw()) <= 0;
}

}  // namespace stirlab
