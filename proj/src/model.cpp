// SPDX-License-Identifier: Apache-2.0

#include "genpal/model.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace genpal {
namespace {

constexpr std::array<std::pair<ModelKind, std::string_view>, 6> kModelNames{{
    {ModelKind::exact, "exact"},
    {ModelKind::theta, "theta"},
    {ModelKind::param, "param"},
    {ModelKind::op, "op"},
    {ModelKind::ct, "ct"},
    {ModelKind::palstruct, "palstruct"},
}};

}  // namespace

std::string_view to_string(ModelKind kind) {
  for (const auto& [k, name] : kModelNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::string_view to_string(Definition d) { return d == Definition::rev ? "rev" : "sym"; }
std::string_view to_string(Direction d) { return d == Direction::outward ? "outward" : "inward"; }

ModelKind parse_model_kind(std::string_view name) {
  for (const auto& [k, n] : kModelNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

Definition parse_definition(std::string_view name) {
  if (name == "rev") return Definition::rev;
  if (name == "sym") return Definition::sym;
  throw std::invalid_argument("unknown definition '" + std::string(name) + "'");
}

Direction parse_direction(std::string_view name) {
  if (name == "outward") return Direction::outward;
  if (name == "inward") return Direction::inward;
  throw std::invalid_argument("unknown direction '" + std::string(name) + "'");
}

}  // namespace genpal
