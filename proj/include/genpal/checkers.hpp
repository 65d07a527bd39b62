// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_CHECKERS_HPP
#define GENPAL_CHECKERS_HPP

#include <cstdint>
#include <vector>

#include "genpal/core.hpp"
#include "genpal/encodings.hpp"
#include "genpal/lce.hpp"
#include "genpal/rev_engine.hpp"

namespace genpal {

class ExactChecker {
 public:
  explicit ExactChecker(const Text& text) : text_(text) {}

  bool base_odd(index_t) { return true; }
  void base_even(index_t) {}
  void rebase(index_t, index_t) {}
  bool try_extend(index_t i, index_t j) const { return text_[i - 1] == text_[j + 1]; }
  void activate(index_t, index_t) {}

 private:
  const Text& text_;
};

/// Complementary matching: T[i-1] must equal f(T[j+1]).
class ThetaChecker {
 public:
  /// Throws std::domain_error if the map does not cover the text.
  ThetaChecker(const Text& text, const ComplementMap& map);

  bool base_odd(index_t c) const { return text_[c] == map_(text_[c]); }
  void base_even(index_t) {}
  void rebase(index_t, index_t) {}
  bool try_extend(index_t i, index_t j) const { return text_[i - 1] == map_(text_[j + 1]); }
  void activate(index_t, index_t) {}

 private:
  const Text& text_;
  const ComplementMap& map_;
};

/// Parameterized matching. Only the last PE entries of the extended window and
/// of its reversal need comparing.
class ParamChecker {
 public:
  ParamChecker(const Text& text, const StaticSymbols& statics);

  bool base_odd(index_t) { return true; }
  void base_even(index_t) {}
  void rebase(index_t, index_t) {}
  bool try_extend(index_t i, index_t j) const;
  void activate(index_t, index_t) {}

 private:
  index_t n_;
  PEArray pe_;
  PEArray pe_rev_;
};

/// Cartesian-tree matching.
///
/// The state is the list of zeros of PD over the current window read right to
/// left (its right-to-left strict minima), stored as text positions with the
/// one nearest the right end on top. Because the window is a palindrome, the
/// forward zeros sit at the mirrored window indices, so one list serves both
/// directions. Extending by x = T[i-1], y = T[j+1] turns the top run of forward
/// zeros with x <= value into nonzeros, likewise backward zeros with y <= value;
/// the extension is a palindrome iff both runs have the same length and the
/// new last PD entries agree.
class CtChecker {
 public:
  CtChecker(const Text& text, Counters& counters);

  bool base_odd(index_t c);
  void base_even(index_t k);
  /// Shrink the window to [i..j]; j must equal the current right end.
  void rebase(index_t i, index_t j);
  bool try_extend(index_t i, index_t j);
  void activate(index_t i, index_t j);

  /// Text positions of backward zeros, nearest to the right end first.
  [[nodiscard]] std::vector<index_t> backward_zeros() const;
  /// Text positions of forward zeros, nearest to the left end first.
  [[nodiscard]] std::vector<index_t> forward_zeros() const;
  [[nodiscard]] Window window() const { return {i_, j_}; }

 private:
  [[nodiscard]] index_t zero_count() const { return static_cast<index_t>(zeros_.size() - floor_); }
  [[nodiscard]] index_t zero_from_top(index_t k) const { return zeros_[zeros_.size() - 1 - static_cast<std::size_t>(k)]; }

  const Text& text_;
  Counters& counters_;
  index_t n_;
  PDArray pd_;
  PDArray pd_rev_;
  std::vector<index_t> zeros_;
  std::size_t floor_ = 0;  // zeros_[0..floor_) were truncated away
  index_t i_ = 1;
  index_t j_ = 0;
  index_t active_min_ = 0;
};

/// Per text position, the ascending lengths of the exact maximal palindromes
/// starting (ending) there, each list closed by a position-unique delimiter.
/// Lengths are 1..n; the delimiter of position p is n+p on the start side and
/// 2n+p on the end side.
struct PalstructLists {
  index_t n = 0;
  std::vector<std::uint32_t> start_seq;
  std::vector<std::uint32_t> end_seq;
  std::vector<index_t> start_offset;  // 1-based into start_seq ++ end_seq, indexed by position
  std::vector<index_t> end_offset;
  LceIndex index;  // over start_seq ++ end_seq

  [[nodiscard]] bool is_delimiter(std::uint32_t token) const { return token > static_cast<std::uint64_t>(n); }
  [[nodiscard]] std::uint32_t token(index_t pos) const;  // 1-based into the combined sequence
};

PalstructLists build_palstruct_lists(const Text& text);
PalstructLists build_palstruct_lists(const CenterArray& exact);

/// Palindromic-structure matching. Extending [i..j] is a palindrome iff the
/// maximal palindromes of T starting at i and ending at j agree up to length
/// j-i, and T[i-1] = T[i] exactly when T[j] = T[j+1].
class PalstructChecker {
 public:
  PalstructChecker(const Text& text, const PalstructLists& lists) : text_(text), lists_(lists) {}

  bool base_odd(index_t) { return true; }
  void base_even(index_t) {}
  void rebase(index_t, index_t) {}
  bool try_extend(index_t i, index_t j) const;
  void activate(index_t, index_t) {}

 private:
  const Text& text_;
  const PalstructLists& lists_;
};

}  // namespace genpal

#endif  // GENPAL_CHECKERS_HPP
