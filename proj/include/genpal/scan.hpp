// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_SCAN_HPP
#define GENPAL_SCAN_HPP

#include "genpal/core.hpp"
#include "genpal/model.hpp"

namespace genpal {

/// Throws std::invalid_argument unless the combination is defined: inward
/// requires the ct model and the sym definition.
void validate(const Model& model, Definition definition, Direction direction);

/// All maximal palindromes of `text`, one length per center.
CenterArray maximal_palindromes(const Text& text, const Model& model, Definition definition,
                                Direction direction = Direction::outward);

}  // namespace genpal

#endif  // GENPAL_SCAN_HPP
