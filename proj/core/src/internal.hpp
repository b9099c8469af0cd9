#pragma once

// Internal helpers shared between the evaluator and analysis translation
// units. Not installed.

#include <string>
#include <utility>

#include "stirlab/hpreal.hpp"
#include "stirlab/methods.hpp"
#include "stirlab/precision.hpp"

namespace stirlab::detail {

// ln of the method's approximation evaluated at working precision p with no
// final re-rounding or validation; the public ln_approx wraps this.
HPReal ln_approx_raw(MethodId method, const HPReal& x, long p);

// Adaptive certification loop. `eval(p)` must return the raw value at
// internal precision p. Under precision_doubling the value is recomputed at
// p + 64 and accepted only if both agree to the context's relative tolerance
// 2^-(bits - guard_bits); on disagreement the padding doubles, up to a hard
// cap, after which PrecisionError is thrown. Returns the value rounded to
// ctx.bits plus the internal precision that certified it.
template <typename F>
std::pair<HPReal, long> certified_eval(F&& eval, const PrecisionContext& ctx,
                                       long start_pad,
                                       const std::string& what) {
  ctx.check();
  long pad = start_pad < 0 ? 0 : start_pad;
  constexpr long kPrecCap = 1L << 22;
  while (true) {
    long p = ctx.bits + pad + ctx.guard_bits;
    if (p > kPrecCap) {
      throw PrecisionError(what + ": cannot certify result below precision cap (" +
                           std::to_string(kPrecCap) + " bits)");
    }
    HPReal r1 = eval(p);
    if (ctx.validation == Validation::none) {
      return {r1.at(ctx.bits), p};
    }
    HPReal r2 = eval(p + 64);
    if (HPReal::agree_to(r1, r2, ctx.certified_bits())) {
      return {r2.at(ctx.bits), p + 64};
    }
    pad = pad * 2 + 64;
  }
}

}  // namespace stirlab::detail
