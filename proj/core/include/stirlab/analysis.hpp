#pragma once

#include <vector>

#include "stirlab/hpreal.hpp"
#include "stirlab/methods.hpp"
#include "stirlab/precision.hpp"

namespace stirlab {

// One (method, n) cell: exact ln n!, the method's ln value, and the signed
// percentage error 100*(exp(ln_approx - ln_exact) - 1). Tables print |pct|;
// the sign is kept here. bits_used records the internal evaluation precision
// at which the value was certified.
struct ErrorRecord {
  long n = 0;
  MethodId method = MethodId::S;
  HPReal ln_exact;
  HPReal ln_approx_value;
  HPReal pct_error;
  long bits_used = 0;
};

// Extracted theta_n (the exact correction that makes the sixth-root formula
// an identity) together with both bound pairs: the classical (3/10, 1) and
// the sharper rational-polynomial pair
//   hv_lo = 1 - 11/(8n) + 79/(112 n^2),  hv_hi = hv_lo + 20/(33 n^3).
struct ThetaRecord {
  long n = 0;
  HPReal theta;
  Rat ram_lo{3, 10};
  Rat ram_hi{1, 1};
  HPReal hv_lo;
  HPReal hv_hi;
  bool in_ram_bounds = false;
  bool in_hv_bounds = false;
  long bits_used = 0;
};

// Least-squares fit of ln |pct_error| against ln n; -slope estimates the
// convergence order p in error ~ C * n^-p.
struct OrderFit {
  MethodId method = MethodId::S;
  std::vector<long> sample_ns;
  HPReal slope;
  HPReal intercept;
};

// Percentage error of `method` at integer n >= 1, certified under the
// context's validation policy; raises PrecisionError rather than returning a
// silently wrong value when certification fails.
ErrorRecord percentage_error(MethodId method, long n,
                             const PrecisionContext& ctx);

// theta_n = 30*(exp(6*(ln n! - n ln n + n - ln(pi)/2)) - 8n^3 - 4n^2 - n),
// computed with a cancellation-aware precision budget (the exp term is ~8n^3,
// so ~3*log10(n) + 25 extra decimal digits are required before the
// subtraction) and certified to >= 20 significant digits.
ThetaRecord theta_of_n(long n, const PrecisionContext& ctx);

// Fits ln |pct| vs ln n over sample_ns (strictly increasing, length >= 3; all
// errors must be certifiably nonzero). Returns the fitted slope/intercept.
OrderFit estimate_order(MethodId method, const std::vector<long>& sample_ns,
                        const PrecisionContext& ctx);

// A_n = n^3 * (theta_n - 1 + 11/(8n) - 79/(112 n^2)) for n >= 10: the
// sequence whose limit the tweak constant approximates. Requires a deeper
// precision budget (three nested cancellations).
HPReal estimate_A(long n, const PrecisionContext& ctx);

}  // namespace stirlab
