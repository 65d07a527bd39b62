// SPDX-License-Identifier: Apache-2.0

#include "genpal/scan.hpp"

#include <stdexcept>

#include "genpal/rev_engine.hpp"
#include "genpal/sym_engine.hpp"

namespace genpal {

void validate(const Model& model, Definition definition, Direction direction) {
  if (direction == Direction::inward && (model.kind != ModelKind::ct || definition != Definition::sym)) {
    throw std::invalid_argument("inward direction requires --model ct --definition sym");
  }
}

CenterArray maximal_palindromes(const Text& text, const Model& model, Definition definition, Direction direction) {
  validate(model, definition, direction);
  if (definition == Definition::rev) return scan_rev(text, model);
  return scan_sym(text, model, direction).lengths;
}

}  // namespace genpal
