// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_MODEL_HPP
#define GENPAL_MODEL_HPP

#include <string_view>

#include "genpal/encodings.hpp"

namespace genpal {

enum class ModelKind { exact, theta, param, op, ct, palstruct };
enum class Definition { rev, sym };
enum class Direction { outward, inward };

/// A matching model together with its parameters.
struct Model {
  ModelKind kind = ModelKind::exact;
  ComplementMap complement;  // theta only
  StaticSymbols statics;     // param only

  static Model exact() { return {}; }
  static Model theta(ComplementMap f) { return {ModelKind::theta, std::move(f), {}}; }
  static Model param(StaticSymbols statics = {}) { return {ModelKind::param, {}, std::move(statics)}; }
  static Model op() { return {ModelKind::op, {}, {}}; }
  static Model ct() { return {ModelKind::ct, {}, {}}; }
  static Model palstruct() { return {ModelKind::palstruct, {}, {}}; }
};

std::string_view to_string(ModelKind kind);
std::string_view to_string(Definition d);
std::string_view to_string(Direction d);

/// Throw std::invalid_argument on unknown names.
ModelKind parse_model_kind(std::string_view name);
Definition parse_definition(std::string_view name);
Direction parse_direction(std::string_view name);

}  // namespace genpal

#endif  // GENPAL_MODEL_HPP
