#include "stirlab/bignat.hpp"

#include <cctype>
#include <memory>

namespace stirlab {

BigNat BigNat::from_decimal(const std::string& s) {
  if (s.empty()) throw DomainError("BigNat: empty decimal string");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("BigNat: not a non-negative decimal integer: " + s);
    }
  }
  BigNat r;
  if (mpz_set_str(r.z_, s.c_str(), 10) != 0) {
    throw DomainError("BigNat: unparsable decimal string: " + s);
  }
  return r;
}

std::string BigNat::to_decimal() const {
  size_t len = mpz_sizeinbase(z_, 10) + 2;
  std::unique_ptr<char[]> buf(new char[len]);
  mpz_get_str(buf.get(), 10, z_);
  return std::string(buf.get());
}

}  // namespace stirlab
