// Formula registry and evaluators: log-space values, correction factors via
// the ratio route vs the independently coded closed forms, and limits.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmp.h>

#include <cstring>
#include <string>

#include "stirlab/approx.hpp"
#include "stirlab/methods.hpp"
#include "stirlab/precision.hpp"

using namespace stirlab;

namespace {

HPReal dec(const std::string& s, long bits = 512) {
  return HPReal::of_decimal(s, bits);
}

const PrecisionContext kCtx{};

HPReal xi(long n) { return HPReal::of_si(n, kCtx.bits); }

const Rat* find_constant(MethodId m, const std::string& name) {
  for (const auto& [cname, q] : method_spec(m).constants) {
    if (cname == name) return &q;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("registry: names parse back and constants survive a round trip") {
  CHECK(all_methods().size() == 15);
  for (MethodId m : all_methods()) {
    auto parsed = parse_method(method_name(m));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == m);
    CHECK_FALSE(method_spec(m).description.empty());
    for (const auto& [name, q] : method_spec(m).constants) {
      CHECK_FALSE(name.empty());
      CHECK(Rat::parse(q.to_string()) == q);
    }
  }
  CHECK_FALSE(parse_method("XX").has_value());
  CHECK_FALSE(parse_method("").has_value());
  CHECK_FALSE(parse_method("s").has_value());
}

TEST_CASE("registry: blow-up constant is exactly 10^100") {
  const Rat* blow = find_constant(MethodId::PATH, "blowup");
  REQUIRE(blow != nullptr);
  mpz_t t;
  mpz_init(t);
  mpz_ui_pow_ui(t, 10, 100);
  char* s = mpz_get_str(nullptr, 10, t);
  CHECK(blow->to_string() == s);
  void (*freefunc)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, std::strlen(s) + 1);
  mpz_clear(t);
}

TEST_CASE("registry: tweak constant and its decimal expansion") {
  const Rat* a = find_constant(MethodId::SAM, "A");
  REQUIRE(a != nullptr);
  CHECK(a->to_string() == "380279456577/722091376690");
  CHECK(HPReal::agree_to(
      HPReal::of_rat(*a, 512),
      dec("0.5266361970976108486339940922415116564879"), 125));
}

TEST_CASE("registry: series coefficients c1..c4") {
  CHECK(find_constant(MethodId::L4, "c1")->to_string() == "1/12");
  CHECK(find_constant(MethodId::L4, "c2")->to_string() == "1/288");
  CHECK(find_constant(MethodId::L4, "c3")->to_string() == "-139/51840");
  CHECK(find_constant(MethodId::L4, "c4")->to_string() == "-571/2488320");
  // Truncation depth k exposes exactly the first k coefficients.
  CHECK(method_spec(MethodId::L1).constants.size() == 1);
  CHECK(method_spec(MethodId::L2).constants.size() == 2);
  CHECK(method_spec(MethodId::L3).constants.size() == 3);
  CHECK(method_spec(MethodId::L4).constants.size() == 4);
}

TEST_CASE("ln_approx: frozen spot value away from integers") {
  CHECK(HPReal::agree_to(
      ln_approx(MethodId::W, xi(1), kCtx),
      dec("-0.0003417860097294414146103993732076741572015"), 120));
}

TEST_CASE("ln_approx: domain guards") {
  for (MethodId m : all_methods()) {
    CHECK_THROWS_AS(ln_approx(m, HPReal::of_si(0, 256), kCtx), DomainError);
    CHECK_THROWS_AS(ln_approx(m, HPReal::of_si(-2, 256), kCtx), DomainError);
  }
  for (MethodId m :
       {MethodId::L1, MethodId::L2, MethodId::L3, MethodId::L4}) {
    CHECK_THROWS_AS(ln_approx(m, dec("0.5", 256), kCtx), DomainError);
    CHECK_NOTHROW(ln_approx(m, HPReal::of_si(1, kCtx.bits), kCtx));
  }
  CHECK_NOTHROW(ln_approx(MethodId::C, dec("2.5", kCtx.bits), kCtx));
}

TEST_CASE("correction_factor: base form has no correction of its own") {
  CHECK_THROWS_AS(correction_factor(MethodId::S, xi(2), kCtx), DomainError);
  CHECK_THROWS_AS(correction_factor_closed(MethodId::S, xi(2), kCtx),
                  DomainError);
}

TEST_CASE("correction_factor: frozen values") {
  CHECK(HPReal::agree_to(
      correction_factor(MethodId::G, xi(6), kCtx),
      dec("1.013793755049703281499947374200344510347"), 120));
  CHECK(HPReal::agree_to(
      correction_factor(MethodId::B, xi(10), kCtx),
      dec("1.012372639338647675346890761246423629733"), 120));
  CHECK(HPReal::agree_to(
      correction_factor(MethodId::C, xi(5), kCtx),
      dec("1.016783990866783201812084948986396408672"), 120));
  CHECK(HPReal::agree_to(
      correction_factor(MethodId::SAM, xi(2), kCtx),
      dec("1.042210149801975632425832483250486260455"), 120));
  // At x = 1 the Nemes factor is the rational (1 + 1/(12 - 1/10)) = 129/119.
  CHECK(HPReal::agree_to(correction_factor(MethodId::N, xi(1), kCtx),
                         HPReal::of_rat(Rat(129, 119), 512), 300));
}

TEST_CASE("correction_factor: ratio route matches the closed forms") {
  const long xs[] = {1, 2, 5, 10, 100, 10000};
  for (MethodId m : all_methods()) {
    if (m == MethodId::S) continue;
    for (long x : xs) {
      HPReal ratio = correction_factor(m, xi(x), kCtx);
      HPReal closed = correction_factor_closed(m, xi(x), kCtx);
      INFO(method_name(m) << " at x = " << x);
      CHECK(HPReal::ulps_apart(ratio, closed, kCtx.bits) <= 10.0);
    }
  }
}

TEST_CASE("correction_factor: non-integer arguments") {
  for (MethodId m : {MethodId::B, MethodId::R, MethodId::W, MethodId::C,
                     MethodId::SAM}) {
    for (const char* xs : {"2.5", "7.25"}) {
      HPReal x = dec(xs, kCtx.bits);
      INFO(method_name(m) << " at x = " << xs);
      CHECK(HPReal::ulps_apart(correction_factor(m, x, kCtx),
                               correction_factor_closed(m, x, kCtx),
                               kCtx.bits) <= 10.0);
    }
  }
}

TEST_CASE("pathological method: exact relation to its parent form") {
  for (long n : {2L, 10L, 37L}) {
    HPReal x = xi(n);
    HPReal ratio = correction_factor(MethodId::PATH, x, kCtx) /
                   correction_factor(MethodId::C, x, kCtx);
    const long p = 768;
    HPReal xp = HPReal::pow(x.at(p), HPReal::of_si(8, p));
    HPReal expect = HPReal::of_ui(1, p) + dec("1e100", p) / xp;
    INFO("x = " << n);
    CHECK(HPReal::ulps_apart(ratio, expect, kCtx.bits) <= 10.0);
  }
}

TEST_CASE("correction factors tend to 1, monotonically over decades") {
  for (MethodId m : all_methods()) {
    if (m == MethodId::S || m == MethodId::PATH) continue;
    HPReal prev;
    bool have_prev = false;
    long xk = 1;
    for (int k = 1; k <= 6; ++k) {
      xk *= 10;
      HPReal gap = HPReal::abs(correction_factor(m, xi(xk), kCtx) -
                               HPReal::of_ui(1, kCtx.bits));
      INFO(method_name(m) << " at x = 10^" << k);
      if (have_prev) CHECK(gap < prev);
      if (k == 6) CHECK(gap.cmp(Rat(1, 100000)) < 0);
      prev = gap;
      have_prev = true;
    }
  }
}

TEST_CASE("Mortici factor gap at one million") {
  HPReal gap = correction_factor(MethodId::M, xi(1000000), kCtx) -
               HPReal::of_ui(1, kCtx.bits);
  CHECK(HPReal::agree_to(gap, dec("8.333333681e-8"), 25));
}
