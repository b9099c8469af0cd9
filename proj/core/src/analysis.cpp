#include "stirlab/analysis.hpp"

#include <cmath>
#include <string>

#include "internal.hpp"
#include "stirlab/factorial.hpp"

namespace stirlab {

namespace {

// ln(n!) at internal precision p, no validation layer (used inside certified
// evaluators which do their own doubling).
HPReal ln_fact_at(const BigNat& f, long p) {
  PrecisionContext raw_ctx(p, Validation::none, 0);
  return ln_big(f, raw_ctx);
}

long ceil_log2(double v) {
  return static_cast<long>(std::ceil(std::log2(v < 2.0 ? 2.0 : v)));
}

// 8n^3 + 4n^2 + n, exact.
BigNat cubic_exact(long n) {
  BigNat bn(static_cast<unsigned long>(n));
  return bn * bn * bn * BigNat(8) + bn * bn * BigNat(4) + bn;
}

// 1 - 11/(8n) + 79/(112 n^2), exact. Denominators can exceed word size for
// large n, so they are built through decimal strings.
Rat hv_lo_exact(long n) {
  BigNat bn(static_cast<unsigned long>(n));
  Rat one = Rat::parse("1");
  Rat t1 = Rat::parse("-11/" + (bn * BigNat(8)).to_decimal());
  Rat t2 = Rat::parse("79/" + (bn * bn * BigNat(112)).to_decimal());
  return one + t1 + t2;
}

// 20/(33 n^3), exact.
Rat hv_gap_exact(long n) {
  BigNat bn(static_cast<unsigned long>(n));
  return Rat::parse("20/" + (bn * bn * bn * BigNat(33)).to_decimal());
}

// Raw theta_n at internal precision p:
//   30*(exp(6*(ln n! - n ln n + n - ln(pi)/2)) - (8n^3 + 4n^2 + n)).
// The exp term has magnitude ~8n^3, so the subtraction cancels ~log10(8n^3)
// decimal digits; callers budget for that.
HPReal theta_raw(long n, const BigNat& f, long p) {
  HPReal lnF = ln_fact_at(f, p);
  HPReal nn = HPReal::of_ui(static_cast<unsigned long>(n), p);
  HPReal half_ln_pi =
      HPReal::of_rat(Rat::parse("1/2"), p) * HPReal::ln(HPReal::pi(p));
  HPReal r = HPReal::of_ui(6, p) * (lnF - nn * HPReal::ln(nn) + nn - half_ln_pi);
  HPReal t = HPReal::exp(r);
  return HPReal::of_ui(30, p) * (t - HPReal::of_bignat(cubic_exact(n), p));
}

// Decimal-digit cancellation budget converted to bits.
long decimal_pad_bits(double decimal_digits) {
  return static_cast<long>(std::ceil(decimal_digits * 3.3220)) + 16;
}

}  // namespace

ErrorRecord percentage_error(MethodId method, long n,
                             const PrecisionContext& ctx) {
  ctx.check();
  if (n < 1) {
    throw DomainError("percentage_error: n must be >= 1, got " +
                      std::to_string(n));
  }
  BigNat f = factorial_exact(n);  // also enforces the n <= 10^7 guard
  // ln n! has magnitude ~0.7 * bit_length; those leading bits are spent on
  // the integer part, so pad by their count before the cancellation.
  double mag = 0.7 * static_cast<double>(f.bit_length()) + 4.0;
  long pad = ceil_log2(mag) + 16;

  auto [pct, bits_used] = detail::certified_eval(
      [&](long p) {
        HPReal lnE = ln_fact_at(f, p);
        HPReal lnA = detail::ln_approx_raw(
            method, HPReal::of_ui(static_cast<unsigned long>(n), p), p);
        return HPReal::of_ui(100, p) * HPReal::expm1(lnA - lnE);
      },
      ctx, pad,
      "percentage_error(" + method_name(method) + ", " + std::to_string(n) +
          ")");

  ErrorRecord rec;
  rec.n = n;
  rec.method = method;
  rec.bits_used = bits_used;
  long pq = ctx.bits + pad + ctx.guard_bits;
  rec.ln_exact = ln_fact_at(f, pq).at(ctx.bits);
  rec.ln_approx_value =
      detail::ln_approx_raw(method,
                            HPReal::of_ui(static_cast<unsigned long>(n), pq), pq)
          .at(ctx.bits);
  rec.pct_error = pct;
  return rec;
}

ThetaRecord theta_of_n(long n, const PrecisionContext& ctx) {
  ctx.check();
  if (n < 1) {
    throw DomainError("theta_of_n: n must be >= 1, got " + std::to_string(n));
  }
  BigNat f = factorial_exact(n);
  // The subtraction cancels ~log10(8 n^3) digits; budget 3 log10 n + 25
  // extra decimal digits so theta keeps well over 20 significant digits.
  double digits = 3.0 * std::log10(static_cast<double>(n)) + 25.0;
  long pad = decimal_pad_bits(digits);

  auto [theta, bits_used] = detail::certified_eval(
      [&](long p) { return theta_raw(n, f, p); }, ctx, pad,
      "theta_of_n(" + std::to_string(n) + ")");

  ThetaRecord rec;
  rec.n = n;
  rec.theta = theta;
  rec.bits_used = bits_used;
  Rat lo = hv_lo_exact(n);
  Rat hi = lo + hv_gap_exact(n);
  rec.hv_lo = HPReal::of_rat(lo, ctx.bits);
  rec.hv_hi = HPReal::of_rat(hi, ctx.bits);
  rec.in_ram_bounds = theta.cmp(rec.ram_lo) > 0 && theta.cmp(rec.ram_hi) < 0;
  rec.in_hv_bounds = theta.cmp(lo) > 0 && theta.cmp(hi) < 0;
  return rec;
}

OrderFit estimate_order(MethodId method, const std::vector<long>& sample_ns,
                        const PrecisionContext& ctx) {
  ctx.check();
  if (sample_ns.size() < 3) {
    throw DomainError("estimate_order: need at least 3 sample points");
  }
  for (size_t i = 1; i < sample_ns.size(); ++i) {
    if (sample_ns[i] <= sample_ns[i - 1]) {
      throw DomainError("estimate_order: sample_ns must be strictly increasing");
    }
  }
  const long p = ctx.bits;
  std::vector<HPReal> xs, ys;
  xs.reserve(sample_ns.size());
  ys.reserve(sample_ns.size());
  for (long n : sample_ns) {
    ErrorRecord rec = percentage_error(method, n, ctx);
    if (rec.pct_error.is_zero()) {
      throw DomainError(
          "estimate_order: percentage error is zero at working precision for "
          "n = " +
          std::to_string(n));
    }
    xs.push_back(HPReal::ln(HPReal::of_ui(static_cast<unsigned long>(n), p)));
    ys.push_back(HPReal::ln(HPReal::abs(rec.pct_error).at(p)));
  }
  const auto m = static_cast<unsigned long>(xs.size());
  HPReal xbar = HPReal::of_ui(0, p), ybar = HPReal::of_ui(0, p);
  for (size_t i = 0; i < xs.size(); ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= HPReal::of_ui(m, p);
  ybar /= HPReal::of_ui(m, p);
  HPReal sxy = HPReal::of_ui(0, p), sxx = HPReal::of_ui(0, p);
  for (size_t i = 0; i < xs.size(); ++i) {
    HPReal dx = xs[i] - xbar;
    sxy += dx * (ys[i] - ybar);
    sxx += dx * dx;
  }
  OrderFit fit;
  fit.method = method;
  fit.sample_ns = sample_ns;
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  return fit;
}

HPReal estimate_A(long n, const PrecisionContext& ctx) {
  ctx.check();
  if (n < 10) {
    throw DomainError("estimate_A: n must be >= 10, got " + std::to_string(n));
  }
  BigNat f = factorial_exact(n);
  // Three nested cancellations (theta from the exp term, then the three
  // leading terms of theta's own expansion): budget ~6 log10 n + 35 digits.
  double digits = 6.0 * std::log10(static_cast<double>(n)) + 35.0;
  long pad = decimal_pad_bits(digits);
  Rat lo = hv_lo_exact(n);
  BigNat bn(static_cast<unsigned long>(n));
  BigNat n3 = bn * bn * bn;

  auto [a_n, bits_used] = detail::certified_eval(
      [&](long p) {
        HPReal d = theta_raw(n, f, p) - HPReal::of_rat(lo, p);
        return HPReal::of_bignat(n3, p) * d;
      },
      ctx, pad, "estimate_A(" + std::to_string(n) + ")");
  (void)bits_used;
  return a_n;
}

}  // namespace stirlab
