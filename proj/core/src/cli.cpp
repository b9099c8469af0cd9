#include "stirlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stirlab/analysis.hpp"
#include "stirlab/approx.hpp"
#include "stirlab/factorial.hpp"
#include "stirlab/format.hpp"
#include "stirlab/table.hpp"

namespace stirlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;  // domain/certification/format failure
constexpr int kExitUsage = 2;    // malformed invocation

// Plain decimal rendering for human-facing scalar reports (theta, slopes,
// A_n): "0.3359..." instead of "3.359...e-1" when the exponent is small.
std::string plain_decimal(const HPReal& v, int sig) {
  if (v.is_zero()) return "0";
  std::string sci = v.to_decimal(sig);
  size_t epos = sci.rfind('e');
  long e = std::stol(sci.substr(epos + 1));
  if (e < -4 || e > 14) return sci;
  std::string mant = sci.substr(0, epos);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::string digits;
  for (char ch : mant) {
    if (ch != '.') digits += ch;
  }
  std::string out;
  if (e >= 0) {
    if (static_cast<long>(digits.size()) <= e) {
      digits.append(static_cast<size_t>(e + 1 - digits.size()), '0');
    }
    out = digits.substr(0, static_cast<size_t>(e + 1));
    if (digits.size() > static_cast<size_t>(e + 1)) {
      out += '.';
      out += digits.substr(static_cast<size_t>(e + 1));
    }
  } else {
    out = "0.";
    out.append(static_cast<size_t>(-e - 1), '0');
    out += digits;
  }
  return (neg ? "-" : "") + out;
}

std::optional<std::vector<long>> parse_ns_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) return std::nullopt;
    for (char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    }
    if (tok.size() > 9) return std::nullopt;  // keep within the n <= 10^7 guard
    out.push_back(std::stol(tok));
  }
  if (out.empty()) return std::nullopt;
  return out;
}

MethodId must_parse_method(const std::string& s) {
  auto m = parse_method(s);
  if (!m) throw DomainError("unknown method id: " + s);
  return *m;
}

int run_theta(long n, const PrecisionContext& ctx) {
  ThetaRecord rec = theta_of_n(n, ctx);
  bool lo_r = rec.theta.cmp(rec.ram_lo) > 0;
  bool hi_r = rec.theta.cmp(rec.ram_hi) < 0;
  bool lo_h = rec.theta.cmp(rec.hv_lo) > 0;
  bool hi_h = rec.theta.cmp(rec.hv_hi) < 0;
  std::cout << "theta(" << n << ") = " << plain_decimal(rec.theta, 25) << "\n";
  std::cout << "ram_lo = 0.3 : theta > ram_lo " << (lo_r ? "PASS" : "FAIL")
            << "\n";
  std::cout << "ram_hi = 1 : theta < ram_hi " << (hi_r ? "PASS" : "FAIL")
            << "\n";
  std::cout << "hv_lo = " << plain_decimal(rec.hv_lo, 20)
            << " : theta > hv_lo " << (lo_h ? "PASS" : "FAIL") << "\n";
  std::cout << "hv_hi = " << plain_decimal(rec.hv_hi, 20)
            << " : theta < hv_hi " << (hi_h ? "PASS" : "FAIL") << "\n";
  return (lo_r && hi_r && lo_h && hi_h) ? kExitOk : kExitNumeric;
}

int run_order(MethodId m, const std::vector<long>& ns,
              const PrecisionContext& ctx) {
  OrderFit fit = estimate_order(m, ns, ctx);
  std::cout << "method = " << method_name(m) << "\n";
  std::cout << "ns =";
  for (long n : fit.sample_ns) std::cout << ' ' << n;
  std::cout << "\n";
  std::cout << "slope = " << plain_decimal(fit.slope, 10) << "\n";
  std::cout << "intercept = " << plain_decimal(fit.intercept, 10) << "\n";
  return kExitOk;
}

int run_fit_a(const std::vector<long>& ns, const PrecisionContext& ctx) {
  for (long n : ns) {
    HPReal a = estimate_A(n, ctx);
    std::cout << "A_n(" << n << ") = " << plain_decimal(a, 20) << "\n";
  }
  const MethodSpec& spec = method_spec(MethodId::SAM);
  for (const auto& [name, q] : spec.constants) {
    if (name == "A") {
      PrecisionContext view(ctx.bits, Validation::none, ctx.guard_bits);
      HPReal a = HPReal::of_rat(q, view.bits);
      std::cout << "A = " << q.to_string() << " = " << plain_decimal(a, 25)
                << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// selftest: a compact run of the library's invariant suite.
// ---------------------------------------------------------------------------

struct SelftestReport {
  int failures = 0;
  void check(const std::string& name, bool ok) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  }
};

int run_selftest(const PrecisionContext& ctx) {
  SelftestReport rep;

  {
    bool ok = true;
    for (long n = 2; n <= 12; ++n) {
      BigNat lhs = factorial_exact(n);
      BigNat rhs = factorial_exact(n - 1) * BigNat(static_cast<unsigned long>(n));
      ok = ok && (lhs == rhs);
    }
    rep.check("factorial recurrence n*(n-1)!", ok);
  }
  {
    bool ok = true;
    for (long n : {1L, 2L, 7L, 64L, 1000L}) {
      HPReal a = ln_factorial_exact(n, ctx);
      HPReal b = ln_factorial_sum(n, ctx);
      ok = ok && HPReal::ulps_apart(a, b, ctx.bits) <= 4.0;
    }
    rep.check("ln n! product tree vs sum of logs (<= 4 ulps)", ok);
  }
  {
    bool ok = true;
    for (MethodId m : all_methods()) {
      if (m == MethodId::S) continue;
      for (long x : {1L, 2L, 10L, 100L}) {
        HPReal xr = HPReal::of_ui(static_cast<unsigned long>(x), ctx.bits);
        HPReal f1 = correction_factor(m, xr, ctx);
        HPReal f2 = correction_factor_closed(m, xr, ctx);
        ok = ok && HPReal::ulps_apart(f1, f2, ctx.bits) <= 10.0;
      }
    }
    rep.check("correction factor: ratio route vs closed form (<= 10 ulps)", ok);
  }
  {
    bool ok = true;
    for (MethodId m : all_methods()) {
      if (m == MethodId::S || m == MethodId::PATH) continue;
      HPReal prev(ctx.bits);
      bool have_prev = false;
      for (long k = 1; k <= 6; ++k) {
        long x = 1;
        for (long i = 0; i < k; ++i) x *= 10;
        HPReal xr = HPReal::of_ui(static_cast<unsigned long>(x), ctx.bits);
        HPReal dev = HPReal::abs(correction_factor(m, xr, ctx) -
                                 HPReal::of_ui(1, ctx.bits));
        if (k == 6) {
          ok = ok && dev.cmp(HPReal::of_decimal("1e-5", ctx.bits)) < 0;
        }
        if (have_prev) ok = ok && dev.cmp(prev) < 0;
        prev = dev;
        have_prev = true;
      }
    }
    rep.check("correction factor -> 1 (|f(10^6)-1| < 1e-5, decreasing)", ok);
  }
  {
    bool ok = true;
    bool mono = true;
    HPReal last(ctx.bits);
    bool have_last = false;
    for (long n = 1; n <= 20; ++n) {
      ThetaRecord rec = theta_of_n(n, ctx);
      ok = ok && rec.in_ram_bounds && rec.in_hv_bounds;
      if (have_last) mono = mono && rec.theta.cmp(last) > 0;
      last = rec.theta;
      have_last = true;
    }
    ThetaRecord rec100 = theta_of_n(100, ctx);
    ok = ok && rec100.in_ram_bounds && rec100.in_hv_bounds;
    mono = mono && rec100.theta.cmp(last) > 0;
    rep.check("theta bounds (classical and sharper pair), n in 1..20, 100", ok);
    rep.check("theta increasing toward 1", mono);
  }
  {
    // Substituting the extracted theta back into the sixth-root identity
    // must reproduce ln n! essentially exactly.
    long n = 10;
    ThetaRecord rec = theta_of_n(n, PrecisionContext(ctx.bits + 192,
                                                     ctx.validation,
                                                     ctx.guard_bits));
    long p = ctx.bits + 256;
    HPReal nn = HPReal::of_ui(static_cast<unsigned long>(n), p);
    HPReal poly = ((HPReal::of_ui(8, p) * nn + HPReal::of_ui(4, p)) * nn +
                   HPReal::of_ui(1, p)) *
                      nn +
                  rec.theta.at(p) / HPReal::of_ui(30, p);
    HPReal ln_formula = HPReal::of_rat(Rat::parse("1/2"), p) *
                            HPReal::ln(HPReal::pi(p)) +
                        nn * HPReal::ln(nn) - nn +
                        HPReal::of_rat(Rat::parse("1/6"), p) * HPReal::ln(poly);
    HPReal ln_exact = ln_factorial_exact(
        n, PrecisionContext(p, Validation::none, ctx.guard_bits));
    HPReal pct = HPReal::of_ui(100, p) *
                 HPReal::expm1(ln_formula - ln_exact.at(p));
    bool ok = HPReal::abs(pct).cmp(HPReal::of_decimal("1e-30", p)) < 0;
    rep.check("theta round trip reproduces ln n! (|pct| < 1e-30)", ok);
  }
  {
    bool ok = format_value(HPReal::of_ui(0, ctx.bits), 2) == "0" &&
              format_value(HPReal::of_decimal("4.04978", ctx.bits), 2) == "4.0" &&
              format_value(HPReal::of_decimal("17.3", ctx.bits), 2) == "17" &&
              format_value(HPReal::of_decimal("0.13", ctx.bits), 2) == "1.3e-1" &&
              format_value(HPReal::of_decimal("8.6e-6", ctx.bits), 2) == "8.6e-6";
    rep.check("number-format rule spot checks", ok);
  }
  {
    std::vector<MethodId> chain = {MethodId::S,  MethodId::B, MethodId::G,
                                   MethodId::M,  MethodId::R, MethodId::N,
                                   MethodId::W,  MethodId::HV, MethodId::C,
                                   MethodId::SAM};
    bool ok = true;
    HPReal prev(ctx.bits);
    bool have_prev = false;
    for (MethodId m : chain) {
      HPReal mag =
          HPReal::abs(percentage_error(m, 1000000, ctx).pct_error);
      if (have_prev) ok = ok && mag.cmp(prev) < 0;
      prev = mag;
      have_prev = true;
    }
    rep.check("|pct| strictly ordered S > B > G > M > R > N > W > HV > C > SAM "
              "at n = 10^6",
              ok);
  }
  {
    bool ok = true;
    for (MethodId m : all_methods()) {
      for (const auto& [name, q] : method_spec(m).constants) {
        ok = ok && (Rat::parse(q.to_string()) == q);
      }
    }
    rep.check("exact-rational constants round-trip", ok);
  }

  if (rep.failures == 0) {
    std::cout << "selftest: all checks passed\n";
    return kExitOk;
  }
  std::cout << "selftest: " << rep.failures << " check(s) FAILED\n";
  return kExitNumeric;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{
      "High-precision evaluation of closed-form approximations to n!, with "
      "exact-oracle percentage errors, theta bound checks, convergence-order "
      "fits, and tweak-constant estimation."};
  app.require_subcommand(1);

  long bits = 384;
  bool bits_from_env = false;
  if (const char* env = std::getenv("STIRLAB_BITS")) {
    std::string s(env);
    try {
      size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      bits = v;
      bits_from_env = true;
    } catch (const std::exception&) {
      std::cerr << "error: STIRLAB_BITS is not an integer: '" << s << "'\n";
      return kExitUsage;
    }
  }
  std::string validate_mode = "double";
  app.add_option("--bits", bits,
                 "Working precision in bits (>= 128; default 384, or the "
                 "STIRLAB_BITS environment variable)")
      ->capture_default_str();
  app.add_option("--validate", validate_mode,
                 "Validation policy: none | double (precision doubling)")
      ->check(CLI::IsMember({"none", "double"}))
      ->capture_default_str();

  auto* t_table = app.add_subcommand("table", "Render one of the three preset error tables");
  int which = 0;
  std::string format_str = "markdown";
  int table_digits = 2;
  t_table->add_option("--which", which, "Preset table number")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  t_table->add_option("--format", format_str, "Output format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}))
      ->capture_default_str();
  t_table->add_option("--digits", table_digits, "Significant figures")
      ->check(CLI::Range(1, 50))
      ->capture_default_str();
  t_table->fallthrough();

  auto* t_error = app.add_subcommand("error", "Percentage error of one method at one n");
  std::string err_method;
  long err_n = 0;
  int err_digits = 2;
  t_error->add_option("--method", err_method, "Method id (S B G M R L1..L4 N W HV C SAM PATH)")
      ->required()
      ->check(CLI::Validator(
          [](std::string& s) {
            return parse_method(s) ? std::string()
                                   : "unknown method id: " + s;
          },
          "METHOD"));
  t_error->add_option("--n", err_n, "Integer argument n >= 1")
      ->required()
      ->check(CLI::Range(1L, 10000000L));
  t_error->add_option("--digits", err_digits, "Significant figures")
      ->check(CLI::Range(1, 50))
      ->capture_default_str();
  t_error->fallthrough();

  auto* t_theta = app.add_subcommand("theta", "Extract theta_n and check all four bounds");
  long theta_n = 0;
  t_theta->add_option("--n", theta_n, "Integer argument n >= 1")
      ->required()
      ->check(CLI::Range(1L, 10000000L));
  t_theta->fallthrough();

  auto* t_order = app.add_subcommand("order", "Least-squares convergence-order fit");
  std::string order_method;
  std::string order_ns;
  t_order->add_option("--method", order_method, "Method id")
      ->required()
      ->check(CLI::Validator(
          [](std::string& s) {
            return parse_method(s) ? std::string()
                                   : "unknown method id: " + s;
          },
          "METHOD"));
  t_order->add_option("--ns", order_ns,
                      "Comma-separated sample points, strictly increasing, >= 3 of them")
      ->required();
  t_order->fallthrough();

  auto* t_fita = app.add_subcommand("fit-a", "Estimate the tweak constant from A_n");
  std::string fita_ns;
  t_fita->add_option("--ns", fita_ns, "Comma-separated sample points (each >= 10)")
      ->required();
  t_fita->fallthrough();

  auto* t_selftest = app.add_subcommand("selftest", "Run the invariant suite");
  t_selftest->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (bits < 128) {
    std::cerr << "error: --bits must be >= 128 (got " << bits << ")\n";
    return kExitUsage;
  }
  (void)bits_from_env;

  try {
    PrecisionContext ctx(bits,
                         validate_mode == "none" ? Validation::none
                                                 : Validation::precision_doubling);
    if (*t_table) {
      TableKind kind = which == 1   ? TableKind::T1
                       : which == 2 ? TableKind::T2
                                    : TableKind::T3;
      TableRequest req = table_preset(kind);
      req.sig_figs = table_digits;
      req.format = format_str == "csv"    ? TableFormat::csv
                   : format_str == "json" ? TableFormat::json
                                          : TableFormat::markdown;
      std::cout << render_table(req, ctx);
      return kExitOk;
    }
    if (*t_error) {
      ErrorRecord rec =
          percentage_error(must_parse_method(err_method), err_n, ctx);
      std::cout << format_value(HPReal::abs(rec.pct_error), err_digits)
                << "\n";
      return kExitOk;
    }
    if (*t_theta) {
      return run_theta(theta_n, ctx);
    }
    if (*t_order) {
      auto ns = parse_ns_list(order_ns);
      if (!ns || ns->size() < 3) {
        std::cerr << "error: --ns must be a comma-separated list of at least "
                     "3 positive integers\n";
        return kExitUsage;
      }
      for (size_t i = 1; i < ns->size(); ++i) {
        if ((*ns)[i] <= (*ns)[i - 1]) {
          std::cerr << "error: --ns must be strictly increasing\n";
          return kExitUsage;
        }
      }
      return run_order(must_parse_method(order_method), *ns, ctx);
    }
    if (*t_fita) {
      auto ns = parse_ns_list(fita_ns);
      if (!ns) {
        std::cerr << "error: --ns must be a comma-separated list of positive "
                     "integers\n";
        return kExitUsage;
      }
      return run_fit_a(*ns, ctx);
    }
    if (*t_selftest) {
      return run_selftest(ctx);
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace stirlab
