#include "stirlab/approx.hpp"

#include <cmath>

#include "internal.hpp"

namespace stirlab {

namespace {

// Named exact constants (parsed once; thread-safe static init).
const Rat& r_half() { static const Rat r = Rat::parse("1/2"); return r; }
const Rat& r_third() { static const Rat r = Rat::parse("1/3"); return r; }
const Rat& r_sixth() { static const Rat r = Rat::parse("1/6"); return r; }
const Rat& r_1_12() { static const Rat r = Rat::parse("1/12"); return r; }
const Rat& r_1_30() { static const Rat r = Rat::parse("1/30"); return r; }
const Rat& r_1_10() { static const Rat r = Rat::parse("1/10"); return r; }
const Rat& r_11_8() { static const Rat r = Rat::parse("11/8"); return r; }
const Rat& r_79_112() { static const Rat r = Rat::parse("79/112"); return r; }
const Rat& r_24_7() { static const Rat r = Rat::parse("24/7"); return r; }
const Rat& r_53_210() { static const Rat r = Rat::parse("53/210"); return r; }
const Rat& r_c1() { static const Rat r = Rat::parse("1/12"); return r; }
const Rat& r_c2() { static const Rat r = Rat::parse("1/288"); return r; }
const Rat& r_c3() { static const Rat r = Rat::parse("-139/51840"); return r; }
const Rat& r_c4() { static const Rat r = Rat::parse("-571/2488320"); return r; }
const Rat& r_A() {
  static const Rat r = Rat::parse("380279456577/722091376690");
  return r;
}

HPReal c(const Rat& q, long p) { return HPReal::of_rat(q, p); }
HPReal ui(unsigned long v, long p) { return HPReal::of_ui(v, p); }

// 10^100, the blowup numerator of the pathological method.
HPReal blowup(long p) {
  HPReal t(p);
  mpfr_ui_pow_ui(t.raw(), 10, 100, MPFR_RNDN);
  return t;
}

// ln sqrt(2 pi x) + x ln x - x: the base form all correction factors
// multiply.
HPReal ln_base(const HPReal& x, long p) {
  HPReal pi = HPReal::pi(p);
  HPReal half = c(r_half(), p);
  return half * HPReal::ln(ui(2, p) * pi * x) + x * HPReal::ln(x) - x;
}

// theta-hat(x) = 1 - (11/8)/x + (79/112)/x^2.
HPReal theta_hat(const HPReal& x, long p) {
  return ui(1, p) - c(r_11_8(), p) / x + c(r_79_112(), p) / (x * x);
}

// 8x^3 + 4x^2 + x, Horner form.
HPReal cubic(const HPReal& x, long p) {
  return ((ui(8, p) * x + ui(4, p)) * x + ui(1, p)) * x;
}

// 1 + c1/x + ... truncated after the x^-k term, Horner in u = 1/x.
HPReal series_truncated(const HPReal& x, int k, long p) {
  HPReal u = ui(1, p) / x;
  HPReal acc = ui(0, p);
  if (k >= 4) acc = c(r_c4(), p);
  if (k >= 3) acc = c(r_c3(), p) + u * acc;
  if (k >= 2) acc = c(r_c2(), p) + u * acc;
  acc = c(r_c1(), p) + u * acc;
  return ui(1, p) + u * acc;
}

int series_terms(MethodId m) {
  switch (m) {
    case MethodId::L1: return 1;
    case MethodId::L2: return 2;
    case MethodId::L3: return 3;
    case MethodId::L4: return 4;
    default: return 0;
  }
}

bool is_series(MethodId m) { return series_terms(m) > 0; }

void check_domain(MethodId m, const HPReal& x) {
  if (x.is_nan() || x.sign() <= 0) {
    throw DomainError("ln_approx: x must be > 0");
  }
  if (is_series(m) && x.cmp(HPReal::of_ui(1, x.precision_bits())) < 0) {
    throw DomainError(
        "ln_approx: series truncations require x >= 1 (the series is "
        "meaningless near 0)");
  }
}

// Extra working bits needed because the ln values being combined have
// magnitude ~x ln x; their leading bits are spent on the integer part.
long magnitude_pad(const HPReal& x) {
  double xd = x.to_double();
  if (!(xd > 0) || xd > 1e15) xd = 1e15;
  double mag = (xd >= 1.0) ? xd * (std::log(xd) + 1.0) + 4.0
                           : std::fabs(std::log(xd)) + 4.0;
  return static_cast<long>(std::ceil(std::log2(mag + 4.0))) + 8;
}

}  // namespace

namespace detail {

HPReal ln_approx_raw(MethodId m, const HPReal& x_in, long p) {
  HPReal x = x_in.at(p);
  HPReal pi = HPReal::pi(p);
  HPReal half = c(r_half(), p);
  HPReal result(p);
  switch (m) {
    case MethodId::S:
      result = ln_base(x, p);
      break;
    case MethodId::B: {
      HPReal xh = x + half;
      result = half * HPReal::ln(ui(2, p) * pi) +
               xh * (HPReal::ln(xh) - ui(1, p));
      break;
    }
    case MethodId::G:
      result = half * HPReal::ln(pi) + x * HPReal::ln(x) - x +
               half * HPReal::ln(ui(2, p) * x + c(r_third(), p));
      break;
    case MethodId::M:
      result = half * HPReal::ln(ui(2, p) * pi * x) +
               x * (HPReal::ln(x * x + c(r_1_12(), p)) - HPReal::ln(x) -
                    ui(1, p));
      break;
    case MethodId::R:
      result = half * HPReal::ln(pi) + x * HPReal::ln(x) - x +
               c(r_sixth(), p) * HPReal::ln(cubic(x, p) + c(r_1_30(), p));
      break;
    case MethodId::L1:
    case MethodId::L2:
    case MethodId::L3:
    case MethodId::L4:
      result = ln_base(x, p) + HPReal::ln(series_truncated(x, series_terms(m), p));
      break;
    case MethodId::N:
      result = ln_base(x, p) +
               x * HPReal::log1p(ui(1, p) /
                                 (ui(12, p) * x * x - c(r_1_10(), p)));
      break;
    case MethodId::W:
      result = ln_base(x, p) +
               (x * half) * HPReal::ln(x * HPReal::sinh(ui(1, p) / x));
      break;
    case MethodId::HV:
      result = half * HPReal::ln(pi) + x * HPReal::ln(x) - x +
               c(r_sixth(), p) *
                   HPReal::ln(cubic(x, p) +
                              theta_hat(x, p) * c(r_1_30(), p));
      break;
    case MethodId::C: {
      HPReal denom = (ui(12, p) * x * x + c(r_24_7(), p)) * x - half;
      result = ln_base(x, p) +
               (x * x + c(r_53_210(), p)) * HPReal::log1p(ui(1, p) / denom);
      break;
    }
    case MethodId::SAM: {
      HPReal th = theta_hat(x, p) + c(r_A(), p) / (x * x * x);
      result = half * HPReal::ln(pi) + x * HPReal::ln(x) - x +
               c(r_sixth(), p) *
                   HPReal::ln(cubic(x, p) + th * c(r_1_30(), p));
      break;
    }
    case MethodId::PATH: {
      HPReal x4 = x * x * x * x;
      result = ln_approx_raw(MethodId::C, x, p) +
               HPReal::log1p(blowup(p) / (x4 * x4));
      break;
    }
  }
  if (result.is_nan()) {
    throw DomainError("ln_approx: formula undefined at this x (method " +
                      method_name(m) + ")");
  }
  return result;
}

}  // namespace detail

HPReal ln_approx(MethodId method, const HPReal& x,
                 const PrecisionContext& ctx) {
  check_domain(method, x);
  auto [v, bits] = detail::certified_eval(
      [&](long p) { return detail::ln_approx_raw(method, x, p); }, ctx,
      magnitude_pad(x), "ln_approx(" + method_name(method) + ")");
  (void)bits;
  return v;
}

namespace {

// Closed forms of f(x) for the ratio cross-check, coded independently of the
// log-space evaluators.
HPReal closed_raw(MethodId m, const HPReal& x_in, long p) {
  HPReal x = x_in.at(p);
  HPReal one = ui(1, p);
  HPReal half = c(r_half(), p);
  switch (m) {
    case MethodId::S:
      throw DomainError("correction_factor: method S is the base form");
    case MethodId::B: {
      HPReal t = one + one / (ui(2, p) * x);
      return HPReal::pow(t, x) * HPReal::sqrt(t / HPReal::euler_e(p));
    }
    case MethodId::G:
      return HPReal::sqrt(one + one / (ui(6, p) * x));
    case MethodId::M:
      return HPReal::pow(one + one / (ui(12, p) * x * x), x);
    case MethodId::R:
      return HPReal::pow(one + half / x + one / (ui(8, p) * x * x) +
                             one / (ui(240, p) * x * x * x),
                         c(r_sixth(), p));
    case MethodId::L1:
    case MethodId::L2:
    case MethodId::L3:
    case MethodId::L4:
      return series_truncated(x, series_terms(m), p);
    case MethodId::N:
      return HPReal::pow(
          one + one / (ui(12, p) * x * x - c(r_1_10(), p)), x);
    case MethodId::W:
      return HPReal::pow(x * HPReal::sinh(one / x), x * half);
    case MethodId::HV:
      return HPReal::pow(one + half / x + one / (ui(8, p) * x * x) +
                             theta_hat(x, p) / (ui(240, p) * x * x * x),
                         c(r_sixth(), p));
    case MethodId::C: {
      HPReal denom = (ui(12, p) * x * x + c(r_24_7(), p)) * x - half;
      return HPReal::pow(one + one / denom, x * x + c(r_53_210(), p));
    }
    case MethodId::SAM: {
      HPReal th = theta_hat(x, p) + c(r_A(), p) / (x * x * x);
      return HPReal::pow(one + half / x + one / (ui(8, p) * x * x) +
                             th / (ui(240, p) * x * x * x),
                         c(r_sixth(), p));
    }
    case MethodId::PATH: {
      HPReal x4 = x * x * x * x;
      return closed_raw(MethodId::C, x, p) * (one + blowup(p) / (x4 * x4));
    }
  }
  throw DomainError("correction_factor: unknown MethodId");
}

void check_cf_domain(MethodId m, const HPReal& x) {
  if (m == MethodId::S) {
    throw DomainError("correction_factor: method S is the base form");
  }
  check_domain(m, x);
}

}  // namespace

HPReal correction_factor(MethodId method, const HPReal& x,
                         const PrecisionContext& ctx) {
  check_cf_domain(method, x);
  auto [v, bits] = detail::certified_eval(
      [&](long p) {
        HPReal diff = detail::ln_approx_raw(method, x, p) -
                      detail::ln_approx_raw(MethodId::S, x, p);
        return HPReal::exp(diff);
      },
      ctx, magnitude_pad(x),
      "correction_factor(" + method_name(method) + ")");
  (void)bits;
  return v;
}

HPReal correction_factor_closed(MethodId method, const HPReal& x,
                                const PrecisionContext& ctx) {
  check_cf_domain(method, x);
  auto [v, bits] = detail::certified_eval(
      [&](long p) {
        HPReal f = closed_raw(method, x, p);
        if (f.is_nan()) {
          throw DomainError("correction_factor_closed: undefined at this x");
        }
        return f;
      },
      ctx, magnitude_pad(x),
      "correction_factor_closed(" + method_name(method) + ")");
  (void)bits;
  return v;
}

}  // namespace stirlab
