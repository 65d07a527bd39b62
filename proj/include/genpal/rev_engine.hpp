// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_REV_ENGINE_HPP
#define GENPAL_REV_ENGINE_HPP

#include <concepts>
#include <cstdint>

#include "genpal/core.hpp"
#include "genpal/model.hpp"

namespace genpal {

/// Work counters of one rev scan. All monotone during a scan.
struct Counters {
  std::uint64_t copies = 0;
  std::uint64_t extension_attempts = 0;
  std::uint64_t extension_successes = 0;
  std::uint64_t zero_pushes = 0;
  std::uint64_t zero_pops = 0;      // zero -> nonzero updates of the Cartesian-tree checker
  std::uint64_t rebase_tokens = 0;  // zero-list entries dropped when rebasing
  std::uint64_t zero_probes = 0;    // zero-list entries inspected while deciding an extension
  std::uint64_t rebases = 0;
  // Rebases whose new window starts at or before the minimum of the active window.
  // Always 0 on permutations; meaningless on inputs with repeated symbols.
  std::uint64_t min_witness_violations = 0;

  [[nodiscard]] std::uint64_t work() const {
    return copies + extension_attempts + zero_pushes + zero_pops + rebase_tokens + zero_probes;
  }

  Counters& operator+=(const Counters& o);
};

/// One extension step of the framework for a fixed matching model.
///
/// The framework guarantees that every window handed to `rebase` or
/// `try_extend` is a rev-palindrome under the model, that `try_extend` is only
/// called when T[i-1] and T[j+1] exist, and that `rebase(i, j)` only ever
/// shrinks the most recently computed window from the left.
template <class C>
concept ExtensionChecker = requires(C c, index_t i, index_t j) {
  { c.base_odd(i) } -> std::same_as<bool>;  // is T[i..i] a palindrome?
  c.base_even(i);                            // start from the empty window [i+1..i]
  c.rebase(i, j);
  { c.try_extend(i, j) } -> std::same_as<bool>;  // is T[i-1..j+1] a palindrome? commits on success
  c.activate(i, j);                              // [i..j] became the rightmost palindrome
};

/// Runs the generalized Manacher scan, odd centers first, then even centers.
template <ExtensionChecker C>
CenterArray manacher_scan(index_t n, C& checker, Counters& counters) {
  CenterArray out(n);
  for (const index_t first : {index_t{1}, index_t{2}}) {
    // Rightmost-ending non-empty palindrome of this pass: center t, window [b..e].
    bool has_active = false;
    index_t active_t = 0;
    index_t b = 0;
    index_t e = 0;
    for (index_t t = first; t <= 2 * n - 1; t += 2) {
      index_t i = 0;
      index_t j = 0;
      if (has_active && t + 1 <= 2 * e) {
        const index_t m = 2 * active_t - t;
        const index_t mirrored = out[m];
        // Doubled start of the mirrored palindrome is m + 2 - length.
        if (m + 2 - mirrored > 2 * b) {
          out[t] = mirrored;
          ++counters.copies;
          continue;
        }
        i = t + 1 - e;
        j = e;
        checker.rebase(i, j);
      } else if (t & 1) {
        const index_t c = (t + 1) / 2;
        if (!checker.base_odd(c)) {
          out[t] = 0;
          continue;
        }
        i = j = c;
      } else {
        const index_t k = t / 2;
        checker.base_even(k);
        i = k + 1;
        j = k;
      }
      while (i > 1 && j < n) {
        ++counters.extension_attempts;
        if (!checker.try_extend(i, j)) break;
        ++counters.extension_successes;
        --i;
        ++j;
      }
      out[t] = j - i + 1;
      if (j >= i && (!has_active || j > e)) {
        has_active = true;
        active_t = t;
        b = i;
        e = j;
        checker.activate(i, j);
      }
    }
  }
  return out;
}

/// All maximal rev-palindromes of `text` under `model`, one length per center.
CenterArray scan_rev(const Text& text, const Model& model);
CenterArray scan_rev(const Text& text, const Model& model, Counters& counters);

/// Order-preserving rev-palindromes coincide with exact ones.
CenterArray scan_rev_op(const Text& text);

}  // namespace genpal

#endif  // GENPAL_REV_ENGINE_HPP
