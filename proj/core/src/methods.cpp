#include "stirlab/methods.hpp"

#include <map>
#include <string>

#include "stirlab/precision.hpp"

namespace stirlab {

const std::vector<MethodId>& all_methods() {
  static const std::vector<MethodId> ids = {
      MethodId::S,  MethodId::B,  MethodId::G,  MethodId::M,   MethodId::R,
      MethodId::L1, MethodId::L2, MethodId::L3, MethodId::L4,  MethodId::N,
      MethodId::W,  MethodId::HV, MethodId::C,  MethodId::SAM, MethodId::PATH};
  return ids;
}

std::string method_name(MethodId m) {
  switch (m) {
    case MethodId::S: return "S";
    case MethodId::B: return "B";
    case MethodId::G: return "G";
    case MethodId::M: return "M";
    case MethodId::R: return "R";
    case MethodId::L1: return "L1";
    case MethodId::L2: return "L2";
    case MethodId::L3: return "L3";
    case MethodId::L4: return "L4";
    case MethodId::N: return "N";
    case MethodId::W: return "W";
    case MethodId::HV: return "HV";
    case MethodId::C: return "C";
    case MethodId::SAM: return "SAM";
    case MethodId::PATH: return "PATH";
  }
  throw DomainError("method_name: unknown MethodId");
}

std::optional<MethodId> parse_method(const std::string& name) {
  static const std::map<std::string, MethodId> lut = []() {
    std::map<std::string, MethodId> m;
    for (MethodId id : all_methods()) m[method_name(id)] = id;
    return m;
  }();
  auto it = lut.find(name);
  if (it == lut.end()) return std::nullopt;
  return it->second;
}

namespace {

MethodSpec make_spec(MethodId id, std::string description,
                     std::vector<std::pair<std::string, std::string>> consts) {
  MethodSpec s;
  s.id = id;
  s.description = std::move(description);
  for (auto& [name, lit] : consts) {
    s.constants.emplace_back(name, Rat::parse(lit));
  }
  return s;
}

const std::map<MethodId, MethodSpec>& registry() {
  static const std::map<MethodId, MethodSpec> reg = []() {
    std::map<MethodId, MethodSpec> r;
    auto put = [&r](MethodSpec s) { r.emplace(s.id, std::move(s)); };
    put(make_spec(MethodId::S,
                  "base form sqrt(2 pi x) (x/e)^x", {}));
    put(make_spec(MethodId::B,
                  "sqrt(2 pi) ((x+1/2)/e)^(x+1/2)",
                  {{"shift", "1/2"}}));
    put(make_spec(MethodId::G,
                  "sqrt(pi) (x/e)^x sqrt(2x + 1/3)",
                  {{"tail", "1/3"}}));
    put(make_spec(MethodId::M,
                  "sqrt(2 pi x) (x/e + 1/(12 e x))^x",
                  {{"series_head", "1/12"}}));
    put(make_spec(MethodId::R,
                  "sqrt(pi) (x/e)^x (8x^3 + 4x^2 + x + 1/30)^(1/6)",
                  {{"tail", "1/30"}}));
    put(make_spec(MethodId::L1,
                  "series truncation: base * (1 + 1/(12x))",
                  {{"c1", "1/12"}}));
    put(make_spec(MethodId::L2,
                  "series truncation through x^-2",
                  {{"c1", "1/12"}, {"c2", "1/288"}}));
    put(make_spec(MethodId::L3,
                  "series truncation through x^-3",
                  {{"c1", "1/12"}, {"c2", "1/288"}, {"c3", "-139/51840"}}));
    put(make_spec(MethodId::L4,
                  "series truncation through x^-4",
                  {{"c1", "1/12"},
                   {"c2", "1/288"},
                   {"c3", "-139/51840"},
                   {"c4", "-571/2488320"}}));
    put(make_spec(MethodId::N,
                  "base * (1 + 1/(12x^2 - 1/10))^x",
                  {{"denom_shift", "1/10"}}));
    put(make_spec(MethodId::W,
                  "base * (x sinh(1/x))^(x/2)", {}));
    put(make_spec(MethodId::HV,
                  "sixth-root form with theta-hat = 1 - 11/(8x) + 79/(112x^2)",
                  {{"t1", "11/8"}, {"t2", "79/112"}, {"tail_scale", "1/30"}}));
    put(make_spec(MethodId::C,
                  "base * (1 + 1/(12x^3 + (24/7)x - 1/2))^(x^2 + 53/210)",
                  {{"lin", "24/7"}, {"shift", "1/2"}, {"expo_tail", "53/210"}}));
    put(make_spec(MethodId::SAM,
                  "sixth-root form with theta-hat + A/x^3",
                  {{"t1", "11/8"},
                   {"t2", "79/112"},
                   {"tail_scale", "1/30"},
                   {"A", "380279456577/722091376690"}}));
    put(make_spec(
        MethodId::PATH,
        "Chen's form times (1 + 10^100/x^8): asymptotically exact, useless "
        "at practical x",
        {{"lin", "24/7"},
         {"shift", "1/2"},
         {"expo_tail", "53/210"},
         {"blowup",
          "1000000000000000000000000000000000000000000000000000000000000000000"
          "0000000000000000000000000000000000"}}));
    return r;
  }();
  return reg;
}

}  // namespace

const MethodSpec& method_spec(MethodId m) {
  auto it = registry().find(m);
  if (it == registry().end()) {
    throw DomainError("method_spec: unknown MethodId");
  }
  return it->second;
}

}  // namespace stirlab
