// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_ENCODINGS_HPP
#define GENPAL_ENCODINGS_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "genpal/core.hpp"

namespace genpal {

/// An involution f on the symbols 0..size-1 (f(f(s)) == s, fixed points allowed).
class ComplementMap {
 public:
  ComplementMap() = default;
  /// Throws std::invalid_argument unless `image` is an involution on its index range.
  explicit ComplementMap(std::vector<symbol_t> image);

  static ComplementMap identity(symbol_t size);
  /// A<->T, C<->G on the byte alphabet; every other byte is fixed.
  static ComplementMap watson_crick();
  /// Pairs 2k <-> 2k+1 on 0..size-1; the last symbol is fixed when size is odd.
  static ComplementMap adjacent_pairs(symbol_t size);

  /// Throws std::domain_error for symbols outside the map.
  [[nodiscard]] symbol_t operator()(symbol_t s) const;
  [[nodiscard]] symbol_t size() const { return static_cast<symbol_t>(image_.size()); }
  [[nodiscard]] bool covers(const Text& text) const { return text.alphabet_bound() <= size(); }
  [[nodiscard]] std::span<const symbol_t> table() const { return image_; }

 private:
  std::vector<symbol_t> image_;
};

/// Pointwise image f(T).
Text complement_apply(const ComplementMap& map, const Text& text);

/// The static symbols of the parameterized model. Everything else is parameterized.
class StaticSymbols {
 public:
  StaticSymbols() = default;
  explicit StaticSymbols(std::span<const symbol_t> symbols);

  [[nodiscard]] bool contains(symbol_t s) const { return s < mask_.size() && mask_[s]; }
  [[nodiscard]] bool none() const { return count_ == 0; }

 private:
  std::vector<bool> mask_;
  std::size_t count_ = 0;
};

/// Previous encoding. Parameterized positions hold the distance to the previous
/// occurrence (0 if none); static positions hold the marker -(symbol + 1).
using PEArray = std::vector<std::int64_t>;

[[nodiscard]] constexpr std::int64_t static_marker(symbol_t s) { return -static_cast<std::int64_t>(s) - 1; }
[[nodiscard]] constexpr bool is_static_marker(std::int64_t v) { return v < 0; }

PEArray prev_encoding(const Text& text, const StaticSymbols& statics = {});

/// PE of the substring T[i..] at offset k (1-based), from the PE of T.
std::int64_t pe_window(std::span<const std::int64_t> pe, index_t i, index_t k);

/// (alpha, beta): rightmost occurrence of the predecessor/successor among earlier positions.
using CodeArray = std::vector<std::pair<index_t, index_t>>;

CodeArray op_code(const Text& text);

/// Parent distance: distance to the nearest earlier position holding a value <= T[k].
using PDArray = std::vector<index_t>;

PDArray parent_distance(const Text& text);

/// PD of the substring T[i..j] at offset k, from the PD of T.
index_t pd_window(std::span<const index_t> pd, index_t i, index_t j, index_t k);

/// Length of the longest palindromic suffix of T[1..k], for each k.
using LPalArray = std::vector<index_t>;

LPalArray lpal(const Text& text);
/// Same, from a precomputed exact maximal-palindrome array.
LPalArray lpal_from_maximal(const CenterArray& exact);

}  // namespace genpal

#endif  // GENPAL_ENCODINGS_HPP
