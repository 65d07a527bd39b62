// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_LCE_HPP
#define GENPAL_LCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "genpal/core.hpp"
#include "genpal/encodings.hpp"

namespace genpal {

/// Range-minimum over a fixed array: sparse table over 32-element blocks plus
/// per-position stack bitmasks inside a block. O(n) words, O(1) queries.
class RangeMin {
 public:
  RangeMin() = default;
  explicit RangeMin(std::span<const std::uint32_t> values);

  /// Minimum of values[lo..hi], 0-based inclusive, lo <= hi.
  [[nodiscard]] std::uint32_t query(std::size_t lo, std::size_t hi) const;

 private:
  static constexpr std::size_t kBlock = 32;

  [[nodiscard]] std::uint32_t in_block(std::size_t lo, std::size_t hi) const;

  std::span<const std::uint32_t> values_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::vector<std::uint32_t>> table_;  // table_[level][block]
};

/// Suffix array + LCP + RMQ over an integer sequence. Positions are 1-based.
class LceIndex {
 public:
  LceIndex() = default;
  /// Index over `sequence` exactly as given.
  explicit LceIndex(std::vector<std::uint32_t> sequence);
  LceIndex(const LceIndex&) = delete;
  LceIndex& operator=(const LceIndex&) = delete;
  LceIndex(LceIndex&&) noexcept = default;
  LceIndex& operator=(LceIndex&&) noexcept = default;

  /// Index over parts[0] $0 parts[1] $1 ...: every part is followed by a unique
  /// separator smaller than all content. part_offset(k) gives where part k starts.
  static LceIndex concatenate(std::span<const std::span<const symbol_t>> parts);

  [[nodiscard]] index_t size() const { return static_cast<index_t>(sequence_.size()); }
  [[nodiscard]] std::span<const std::uint32_t> sequence() const { return sequence_; }
  [[nodiscard]] std::span<const std::uint32_t> suffix_array() const { return sa_; }
  [[nodiscard]] std::span<const std::uint32_t> lcp_array() const { return lcp_; }
  [[nodiscard]] index_t part_offset(std::size_t part) const { return offsets_.at(part); }

  /// Length of the longest common prefix of the suffixes starting at p and q.
  [[nodiscard]] index_t lce(index_t p, index_t q) const;

 private:
  void build();

  std::vector<std::uint32_t> sequence_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> lcp_;
  RangeMin rmq_;
  std::vector<index_t> offsets_;
};

/// Outward complementary LCE over T $ f(rev T) #: arm length of the maximal
/// theta sym-palindrome at every center. The identity map gives exact matching.
class OutwardLce {
 public:
  OutwardLce(const Text& text, const ComplementMap& map);

  /// Number of symbol pairs (T[c-r], T[c+r]) with T[c-r] = f(T[c+r]) outward from `center`.
  [[nodiscard]] index_t arm(Center center) const;

 private:
  index_t n_;
  LceIndex index_;
};

index_t outward_lce_theta(const Text& text, const ComplementMap& map, Center center);

}  // namespace genpal

#endif  // GENPAL_LCE_HPP
