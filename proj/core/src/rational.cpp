#include "stirlab/rational.hpp"

#include <cctype>
#include <memory>

namespace stirlab {

namespace {
bool valid_rat_chars(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  int slashes = 0;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      ++slashes;
      if (slashes > 1 || i + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        return false;
      }
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}
}  // namespace

Rat Rat::parse(const std::string& s) {
  if (!valid_rat_chars(s)) {
    throw DomainError("Rat: malformed rational literal: '" + s + "'");
  }
  Rat r;
  if (mpq_set_str(r.q_, s.c_str(), 10) != 0) {
    throw DomainError("Rat: unparsable rational literal: '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(r.q_)) == 0) {
    throw DomainError("Rat: zero denominator in '" + s + "'");
  }
  mpq_canonicalize(r.q_);
  return r;
}

std::string Rat::to_string() const {
  size_t len = mpz_sizeinbase(mpq_numref(q_), 10) +
               mpz_sizeinbase(mpq_denref(q_), 10) + 4;
  std::unique_ptr<char[]> buf(new char[len]);
  mpq_get_str(buf.get(), 10, q_);
  return std::string(buf.get());
}

}  // namespace stirlab
