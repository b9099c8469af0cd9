#pragma once

#include "stirlab/hpreal.hpp"
#include "stirlab/methods.hpp"
#include "stirlab/precision.hpp"

namespace stirlab {

// ln of the method's approximation to Gamma(x+1), evaluated entirely in log
// space at real x > 0 (L1..L4 additionally require x >= 1). The result is
// delivered at ctx.bits and is accurate to the context tolerance; under the
// precision_doubling policy it is cross-checked at +64 bits.
HPReal ln_approx(MethodId method, const HPReal& x, const PrecisionContext& ctx);

// Correction factor f(x) = exp(ln_approx(method, x) - ln_approx(S, x)),
// the factor by which the method multiplies the base form sqrt(2 pi x)(x/e)^x.
// method != S. Internally evaluated with enough extra precision to absorb the
// cancellation of the two ln magnitudes, so the delivered value is accurate
// to about 1 ulp at ctx.bits.
HPReal correction_factor(MethodId method, const HPReal& x,
                         const PrecisionContext& ctx);

// The same f(x) from its independently coded closed form (e.g. G:
// sqrt(1 + 1/(6x)); M: (1 + 1/(12 x^2))^x), used as a cross-check of the
// ratio route. method != S.
HPReal correction_factor_closed(MethodId method, const HPReal& x,
                                const PrecisionContext& ctx);

}  // namespace stirlab
