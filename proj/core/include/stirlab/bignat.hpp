#pragma once

#include <gmp.h>

#include <string>

#include "stirlab/precision.hpp"

namespace stirlab {

// Exact arbitrary-size non-negative integer. Thin value wrapper over GMP's
// mpz_t; immutable-by-convention after construction except through the
// arithmetic operators, which always produce exact results.
class BigNat {
 public:
  BigNat() { mpz_init(z_); }  // zero
  explicit BigNat(unsigned long v) { mpz_init_set_ui(z_, v); }

  BigNat(const BigNat& o) { mpz_init_set(z_, o.z_); }
  BigNat(BigNat&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigNat& operator=(const BigNat& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigNat& operator=(BigNat&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigNat() { mpz_clear(z_); }

  static BigNat from_decimal(const std::string& s);

  BigNat& operator*=(const BigNat& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }
  friend BigNat operator*(const BigNat& a, const BigNat& b) {
    BigNat r(a);
    r *= b;
    return r;
  }
  BigNat& operator+=(const BigNat& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  friend BigNat operator+(const BigNat& a, const BigNat& b) {
    BigNat r(a);
    r += b;
    return r;
  }

  bool operator==(const BigNat& o) const { return mpz_cmp(z_, o.z_) == 0; }
  bool operator!=(const BigNat& o) const { return !(*this == o); }
  int cmp(const BigNat& o) const { return mpz_cmp(z_, o.z_); }

  bool is_zero() const { return mpz_sgn(z_) == 0; }

  // Number of bits in the binary representation (0 has bit length 0).
  unsigned long bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(z_, 2);
  }

  // Floor of *this / 2^bits, exact.
  BigNat shifted_right(unsigned long bits) const {
    BigNat r;
    mpz_tdiv_q_2exp(r.z_, z_, bits);
    return r;
  }

  std::string to_decimal() const;

  mpz_srcptr raw() const { return z_; }

 private:
  mpz_t z_;
};

}  // namespace stirlab
