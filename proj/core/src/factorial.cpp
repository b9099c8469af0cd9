#include "stirlab/factorial.hpp"

#include <map>
#include <mutex>

namespace stirlab {

namespace {

constexpr long kMaxFactorialN = 10000000;  // resource guard

// Exact product of the integer range [lo, hi], balanced binary splitting.
// Splitting keeps the two factors of every multiply near the same size,
// which is what makes n = 10^6 tractable.
BigNat range_product(unsigned long lo, unsigned long hi) {
  if (lo > hi) return BigNat(1);
  if (hi - lo < 8) {
    BigNat acc(lo);
    for (unsigned long k = lo + 1; k <= hi; ++k) acc *= BigNat(k);
    return acc;
  }
  unsigned long mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

std::mutex g_fact_mutex;
std::map<long, BigNat>& fact_cache() {
  static std::map<long, BigNat> cache;
  return cache;
}

// Internal evaluation precision for ln_big: comfortably beyond the delivered
// ctx.bits so the final rounding is the only loss that matters.
long ln_internal_bits(const PrecisionContext& ctx) { return ctx.bits + 32; }

HPReal ln_big_at(const BigNat& v, long prec) {
  unsigned long bits = v.bit_length();
  if (bits <= static_cast<unsigned long>(prec)) {
    return HPReal::ln(HPReal::of_bignat(v, prec));
  }
  // v = m * 2^e with m the top `prec` bits: ln v = ln m + e ln 2.
  unsigned long e = bits - static_cast<unsigned long>(prec);
  BigNat m = v.shifted_right(e);
  HPReal ln_m = HPReal::ln(HPReal::of_bignat(m, prec));
  return ln_m + HPReal::of_ui(e, prec) * HPReal::ln2(prec);
}

}  // namespace

BigNat factorial_exact(long n) {
  if (n < 1 || n > kMaxFactorialN) {
    throw DomainError("factorial_exact: n must be in [1, 10^7], got " +
                      std::to_string(n));
  }
  {
    std::lock_guard<std::mutex> lock(g_fact_mutex);
    auto it = fact_cache().find(n);
    if (it != fact_cache().end()) return it->second;
  }
  BigNat r = (n == 1) ? BigNat(1)
                      : range_product(2, static_cast<unsigned long>(n));
  {
    std::lock_guard<std::mutex> lock(g_fact_mutex);
    // Keep the cache small; it exists to share the heavy rows (10^4, 10^6)
    // across the cells of one table and across repeated calls.
    if (fact_cache().size() > 64) fact_cache().clear();
    fact_cache().emplace(n, r);
  }
  return r;
}

HPReal ln_big(const BigNat& v, const PrecisionContext& ctx) {
  ctx.check();
  if (v.is_zero()) throw DomainError("ln_big: argument must be >= 1");
  return ln_big_at(v, ln_internal_bits(ctx)).at(ctx.bits);
}

HPReal ln_factorial_exact(long n, const PrecisionContext& ctx) {
  ctx.check();
  return ln_big(factorial_exact(n), ctx);
}

HPReal ln_factorial_sum(long n, const PrecisionContext& ctx) {
  ctx.check();
  if (n < 1 || n > kMaxFactorialN) {
    throw DomainError("ln_factorial_sum: n must be in [1, 10^7], got " +
                      std::to_string(n));
  }
  // Each term carries <= 1/2 ulp error at precision p; n terms can lose
  // ~log2(n) bits in the running sum, so pad by that plus slack before the
  // single final rounding to ctx.bits.
  long pad = 1;
  while ((1L << pad) < n) ++pad;
  long p = ctx.bits + pad + 32;
  HPReal sum = HPReal::of_ui(0, p);
  for (long k = 2; k <= n; ++k) {
    sum += HPReal::ln(HPReal::of_ui(static_cast<unsigned long>(k), p));
  }
  return sum.at(ctx.bits);
}

}  // namespace stirlab
