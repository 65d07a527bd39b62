// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_ORACLE_HPP
#define GENPAL_ORACLE_HPP

#include "genpal/core.hpp"
#include "genpal/model.hpp"

// Brute-force reference implementations. Nothing here reuses the encodings or
// engines; every relation is decided from its definition.
namespace genpal::oracle {

/// x and y match under `model`. Unequal lengths never match.
bool scsttr_equal(const Text& x, const Text& y, const Model& model);

bool is_rev_palindrome(const Text& x, const Model& model);

/// With x = X a Y and |X| = |Y|: outward compares rev(X) with Y, inward X with rev(Y).
bool is_sym_palindrome(const Text& x, const Model& model, Direction direction = Direction::outward);

/// Per center, the longest palindrome whose extension by one symbol on each
/// side is not a palindrome or leaves the text. Cubic or worse; for small n.
CenterArray maximal_array_bruteforce(const Text& text, const Model& model, Definition definition,
                                     Direction direction = Direction::outward);

}  // namespace genpal::oracle

#endif  // GENPAL_ORACLE_HPP
