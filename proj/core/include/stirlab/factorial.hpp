#pragma once

#include "stirlab/bignat.hpp"
#include "stirlab/hpreal.hpp"
#include "stirlab/precision.hpp"

namespace stirlab {

// Exact n! for 1 <= n <= 10^7, computed by a balanced product tree (binary
// splitting) over big-integer multiplies so that n = 10^6 completes at desk
// scale. Results are memoized per n (pure function; the cache is an
// implementation detail guarded by a mutex).
BigNat factorial_exact(long n);

// ln(v) for v >= 1, computed as ln(m) + e*ln 2 where v = m*2^e and m holds
// the top working-precision bits of v. Relative error is far below the
// context contract 2^-(bits - guard_bits).
HPReal ln_big(const BigNat& v, const PrecisionContext& ctx);

// ln(n!) via the product tree and ln_big.
HPReal ln_factorial_exact(long n, const PrecisionContext& ctx);

// Independent cross-check oracle: ln(n!) = sum of ln k for k = 2..n, summed
// at elevated internal precision and rounded once to ctx.bits. The two paths
// agree to within 4 ulps at ctx.bits.
HPReal ln_factorial_sum(long n, const PrecisionContext& ctx);

}  // namespace stirlab
