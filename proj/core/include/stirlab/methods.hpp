#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stirlab/rational.hpp"

namespace stirlab {

// One identifier per approximation formula in the registry. L1..L4 are the
// truncations of the divergent asymptotic series after the x^-1 .. x^-4
// terms. PATH is the deliberately pathological method: Chen's formula times
// (1 + 10^100/x^8), which is asymptotically exact yet useless at any
// practical x — a demonstration that an order estimate alone says nothing
// about how large "large" must be.
enum class MethodId { S, B, G, M, R, L1, L2, L3, L4, N, W, HV, C, SAM, PATH };

// All methods, in table order: S, B, G, M, R, L1..L4, N, W, HV, C, SAM, PATH.
const std::vector<MethodId>& all_methods();

std::string method_name(MethodId m);
std::optional<MethodId> parse_method(const std::string& name);

// Formula metadata: the exact rational constants a method uses (named), plus
// a one-line description. Constants are stored exactly so that parsing then
// printing them is the identity.
struct MethodSpec {
  MethodId id;
  std::string description;
  std::vector<std::pair<std::string, Rat>> constants;
};

const MethodSpec& method_spec(MethodId m);

}  // namespace stirlab
