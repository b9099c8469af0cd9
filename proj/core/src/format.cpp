#include "stirlab/format.hpp"

#include <mpfr.h>

#include <string>

namespace stirlab {

namespace {

// Significant digits and decimal exponent of |v| rounded to `sig` digits:
// |v| ~= 0.digits * 10^exp10.
std::pair<std::string, long> decimal_parts(const HPReal& v, int sig) {
  mpfr_exp_t e = 0;
  HPReal a = HPReal::abs(v);
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), a.raw(),
                         MPFR_RNDN);
  if (s == nullptr) throw FormatError("format_value: conversion failed");
  std::string digits(s);
  mpfr_free_str(s);
  return {digits, static_cast<long>(e)};
}

}  // namespace

std::string format_value(const HPReal& v, int sig_figs) {
  if (sig_figs < 1) throw FormatError("format_value: sig_figs must be >= 1");
  if (v.is_nan()) throw FormatError("format_value: cannot format NaN");
  if (v.is_zero()) return "0";

  auto [digits, e] = decimal_parts(v, sig_figs);
  const long lead_pow = e - 1;  // power of ten of the leading digit
  std::string out = (v.sign() < 0) ? "-" : "";

  if (lead_pow == 0 || lead_pow == 1) {
    // Plain form for 1 <= |v| < 100 after rounding: "4.0", "1.7", "17".
    long int_digits = lead_pow + 1;
    std::string d = digits;
    while (static_cast<long>(d.size()) < int_digits) d += '0';
    out += d.substr(0, int_digits);
    if (static_cast<long>(d.size()) > int_digits) {
      out += '.';
      out += d.substr(int_digits);
    }
    return out;
  }

  // Scientific form "d.de<k>", exponent signed only when negative.
  out += digits[0];
  if (digits.size() > 1) {
    out += '.';
    out += digits.substr(1);
  }
  out += 'e';
  out += std::to_string(lead_pow);
  return out;
}

std::string format_bignat(const BigNat& v) {
  std::string exact = v.to_decimal();
  if (exact.size() <= 1) return exact;  // single digit: print exactly
  // 2-significant-figure scientific form; 128 bits of mantissa is far more
  // than the rounding to two digits can see.
  HPReal t = HPReal::of_bignat(v, 128);
  return format_value(t, 2);
}

}  // namespace stirlab
