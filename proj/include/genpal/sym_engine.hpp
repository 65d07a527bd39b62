// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_SYM_ENGINE_HPP
#define GENPAL_SYM_ENGINE_HPP

#include "genpal/core.hpp"
#include "genpal/model.hpp"

namespace genpal {

struct SymScanResult {
  CenterArray lengths;
  Direction direction = Direction::outward;
};

/// Maximal sym-palindromes: per center, the longest arms X (left) and Y (right)
/// with rev(X) matching Y. Exact and theta use an outward LCE index; the other
/// models re-encode both arms from the center outward, which is quadratic in the
/// worst case (e.g. long unary runs). Inward is only defined for ct and
/// dispatches to scan_sym_ct_inward; other combinations throw std::invalid_argument.
SymScanResult scan_sym(const Text& text, const Model& model, Direction direction = Direction::outward);

/// Per center, the longest arms with X matching rev(Y) under Cartesian-tree
/// matching. Arm validity is monotone in the radius, so the radius is found by
/// exponential + binary search with O(r) windowed-PD comparisons per probe.
SymScanResult scan_sym_ct_inward(const Text& text);

/// The longest r such that the inward ct arms of radius r match at `center`.
index_t ct_inward_arm(const Text& text, Center center);

}  // namespace genpal

#endif  // GENPAL_SYM_ENGINE_HPP
