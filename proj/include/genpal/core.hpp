// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_CORE_HPP
#define GENPAL_CORE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace genpal {

using symbol_t = std::uint32_t;
using index_t = std::int64_t;

enum class AlphabetKind { byte, tokenized };

/// Immutable symbol sequence. Positions are 1-based throughout the library.
class Text {
 public:
  Text() = default;
  explicit Text(std::vector<symbol_t> symbols, AlphabetKind kind = AlphabetKind::tokenized);

  static Text from_bytes(std::string_view bytes);

  [[nodiscard]] index_t size() const { return static_cast<index_t>(symbols_.size()); }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }

  /// Symbol at 1-based position `pos` (unchecked).
  [[nodiscard]] symbol_t operator[](index_t pos) const { return symbols_[static_cast<std::size_t>(pos - 1)]; }
  [[nodiscard]] symbol_t at(index_t pos) const;

  [[nodiscard]] std::span<const symbol_t> symbols() const { return symbols_; }
  [[nodiscard]] AlphabetKind alphabet_kind() const { return kind_; }

  /// Number of distinct symbols.
  [[nodiscard]] index_t sigma() const { return sigma_; }
  /// One past the largest symbol value (0 for the empty text).
  [[nodiscard]] symbol_t alphabet_bound() const { return bound_; }

  [[nodiscard]] Text reversed() const;
  [[nodiscard]] Text substr(index_t i, index_t j) const;  // T[i..j], empty when i > j
  [[nodiscard]] std::string to_string() const;            // bytes, or space-separated tokens

  friend bool operator==(const Text& a, const Text& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<symbol_t> symbols_;
  AlphabetKind kind_ = AlphabetKind::tokenized;
  index_t sigma_ = 0;
  symbol_t bound_ = 0;
};

/// Order-preserving relabeling onto 0..k-1. Equal tokens share a rank.
Text rank_compress(std::span<const std::int64_t> tokens);

/// A center in doubled coordinates: t = 2c - 1, t in 1..2n-1.
/// Odd t is an integer center, even t a half-integer one.
struct Center {
  index_t t = 1;

  [[nodiscard]] bool integral() const { return (t & 1) != 0; }
  friend auto operator<=>(const Center&, const Center&) = default;
};

/// Inclusive 1-based interval [i..j]; empty when i == j + 1.
struct Window {
  index_t i = 1;
  index_t j = 0;

  [[nodiscard]] index_t length() const { return j - i + 1; }
  [[nodiscard]] bool empty() const { return j < i; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Window of the palindrome of `length` centered at `center` in a text of length n.
/// Length 0 is accepted at both parities; see README for the empty-window convention.
Window window_of(Center center, index_t length, index_t n);

/// Inverse of window_of for non-empty windows and empty half-center windows.
Center center_of(Window w);

/// The center c' - (c - c'), i.e. the mirror image of `c` around `c_prime`.
Center mirror_center(Center c_prime, Center c);

/// Maximal-palindrome lengths, one per center t = 1..2n-1.
class CenterArray {
 public:
  CenterArray() = default;
  explicit CenterArray(index_t n);

  [[nodiscard]] index_t text_length() const { return n_; }
  [[nodiscard]] index_t centers() const { return static_cast<index_t>(lengths_.size()); }

  [[nodiscard]] index_t operator[](index_t t) const { return lengths_[static_cast<std::size_t>(t - 1)]; }
  index_t& operator[](index_t t) { return lengths_[static_cast<std::size_t>(t - 1)]; }
  [[nodiscard]] index_t at(Center c) const;

  [[nodiscard]] Window window(index_t t) const { return window_of(Center{t}, (*this)[t], n_); }
  [[nodiscard]] std::span<const index_t> lengths() const { return lengths_; }

  friend bool operator==(const CenterArray&, const CenterArray&) = default;

 private:
  index_t n_ = 0;
  std::vector<index_t> lengths_;
};

std::string to_string(const CenterArray& a);

}  // namespace genpal

#endif  // GENPAL_CORE_HPP
