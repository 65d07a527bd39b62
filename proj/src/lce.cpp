// SPDX-License-Identifier: Apache-2.0

#include "genpal/lce.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace genpal {

RangeMin::RangeMin(std::span<const std::uint32_t> values) : values_(values), masks_(values.size()) {
  const std::size_t n = values.size();
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::uint32_t> block_min(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t start = b * kBlock;
    const std::size_t stop = std::min(n, start + kBlock);
    // Bit k of masks_[x] is set iff values[start+k] is a strict suffix minimum of values[start..x].
    std::uint32_t stack = 0;
    std::uint32_t lo = values[start];
    for (std::size_t x = start; x < stop; ++x) {
      while (stack != 0) {
        const unsigned top = 31U - static_cast<unsigned>(std::countl_zero(stack));
        if (values[start + top] < values[x]) break;
        stack &= ~(1U << top);
      }
      stack |= 1U << (x - start);
      masks_[x] = stack;
      lo = std::min(lo, values[x]);
    }
    block_min[b] = lo;
  }
  table_.push_back(std::move(block_min));
  for (std::size_t len = 2; len <= blocks; len <<= 1) {
    const auto& prev = table_.back();
    std::vector<std::uint32_t> next(blocks - len + 1);
    for (std::size_t b = 0; b + len <= blocks; ++b) next[b] = std::min(prev[b], prev[b + len / 2]);
    table_.push_back(std::move(next));
  }
}

std::uint32_t RangeMin::in_block(std::size_t lo, std::size_t hi) const {
  const std::size_t start = lo - lo % kBlock;
  const std::uint32_t mask = masks_[hi] >> (lo - start);
  return values_[lo + static_cast<std::size_t>(std::countr_zero(mask))];
}

std::uint32_t RangeMin::query(std::size_t lo, std::size_t hi) const {
  const std::size_t blo = lo / kBlock;
  const std::size_t bhi = hi / kBlock;
  if (blo == bhi) return in_block(lo, hi);
  std::uint32_t best = std::min(in_block(lo, blo * kBlock + kBlock - 1), in_block(bhi * kBlock, hi));
  if (blo + 1 < bhi) {
    const std::size_t span = bhi - blo - 1;
    const auto level = static_cast<std::size_t>(std::bit_width(span) - 1);
    const auto& row = table_[level];
    best = std::min({best, row[blo + 1], row[bhi - (std::size_t{1} << level)]});
  }
  return best;
}

namespace {

// Suffix array by induced sorting (SA-IS). Symbols lie in [0, upper]; a suffix
// sorts before every longer suffix it is a prefix of.
std::vector<std::int32_t> induced_sort(const std::vector<std::int32_t>& s, std::int32_t upper) {
  const auto n = static_cast<std::int32_t>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return s[0] < s[1] ? std::vector<std::int32_t>{0, 1} : std::vector<std::int32_t>{1, 0};

  std::vector<std::int32_t> sa(static_cast<std::size_t>(n));
  // is_s[i]: suffix i is smaller than suffix i+1. The last suffix is L-type.
  std::vector<bool> is_s(static_cast<std::size_t>(n));
  for (std::int32_t i = n - 2; i >= 0; --i) is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : s[i] < s[i + 1];

  // sum_l[c]: first slot of bucket c. sum_s[c]: first S-type slot of bucket c.
  std::vector<std::int32_t> sum_l(static_cast<std::size_t>(upper) + 2);
  std::vector<std::int32_t> sum_s(static_cast<std::size_t>(upper) + 2);
  for (std::int32_t i = 0; i < n; ++i) {
    if (is_s[i]) {
      ++sum_l[s[i] + 1];
    } else {
      ++sum_s[s[i]];
    }
  }
  for (std::int32_t c = 0; c <= upper; ++c) {
    sum_s[c] += sum_l[c];
    sum_l[c + 1] += sum_s[c];
  }

  std::vector<std::int32_t> bucket(static_cast<std::size_t>(upper) + 2);
  const auto induce = [&](const std::vector<std::int32_t>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::copy(sum_s.begin(), sum_s.end(), bucket.begin());
    for (const std::int32_t d : lms) sa[bucket[s[d]]++] = d;
    std::copy(sum_l.begin(), sum_l.end(), bucket.begin());
    sa[bucket[s[n - 1]]++] = n - 1;
    for (std::int32_t r = 0; r < n; ++r) {
      const std::int32_t v = sa[r];
      if (v >= 1 && !is_s[v - 1]) sa[bucket[s[v - 1]]++] = v - 1;
    }
    std::copy(sum_l.begin(), sum_l.end(), bucket.begin());
    for (std::int32_t r = n - 1; r >= 0; --r) {
      const std::int32_t v = sa[r];
      if (v >= 1 && is_s[v - 1]) sa[--bucket[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<std::int32_t> lms_index(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::int32_t> lms;
  for (std::int32_t i = 1; i < n; ++i) {
    if (!is_s[i - 1] && is_s[i]) {
      lms_index[i] = static_cast<std::int32_t>(lms.size());
      lms.push_back(i);
    }
  }
  const auto m = static_cast<std::int32_t>(lms.size());
  induce(lms);
  if (m == 0) return sa;

  // Name LMS substrings in sorted order, then sort the reduced string recursively.
  std::vector<std::int32_t> sorted_lms;
  sorted_lms.reserve(lms.size());
  for (const std::int32_t v : sa) {
    if (lms_index[v] != -1) sorted_lms.push_back(v);
  }
  std::vector<std::int32_t> reduced(lms.size());
  std::int32_t names = 0;
  reduced[lms_index[sorted_lms[0]]] = 0;
  for (std::int32_t k = 1; k < m; ++k) {
    std::int32_t a = sorted_lms[k - 1];
    std::int32_t b = sorted_lms[k];
    const std::int32_t end_a = lms_index[a] + 1 < m ? lms[lms_index[a] + 1] : n;
    const std::int32_t end_b = lms_index[b] + 1 < m ? lms[lms_index[b] + 1] : n;
    bool same = end_a - a == end_b - b;
    if (same) {
      while (a < end_a && s[a] == s[b]) {
        ++a;
        ++b;
      }
      if (a == n || s[a] != s[b]) same = false;
    }
    if (!same) ++names;
    reduced[lms_index[sorted_lms[k]]] = names;
  }
  const std::vector<std::int32_t> reduced_sa = induced_sort(reduced, names);
  for (std::int32_t k = 0; k < m; ++k) sorted_lms[k] = lms[reduced_sa[k]];
  induce(sorted_lms);
  return sa;
}

}  // namespace

LceIndex::LceIndex(std::vector<std::uint32_t> sequence) : sequence_(std::move(sequence)), offsets_{1} { build(); }

LceIndex LceIndex::concatenate(std::span<const std::span<const symbol_t>> parts) {
  std::vector<std::uint32_t> content;
  for (const auto& part : parts) content.insert(content.end(), part.begin(), part.end());
  std::sort(content.begin(), content.end());
  content.erase(std::unique(content.begin(), content.end()), content.end());

  const auto separators = static_cast<std::uint32_t>(parts.size());
  LceIndex index;
  index.offsets_.clear();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    index.offsets_.push_back(static_cast<index_t>(index.sequence_.size()) + 1);
    for (symbol_t s : parts[k]) {
      const auto rank = std::lower_bound(content.begin(), content.end(), s) - content.begin();
      index.sequence_.push_back(separators + static_cast<std::uint32_t>(rank));
    }
    index.sequence_.push_back(static_cast<std::uint32_t>(k));
  }
  index.build();
  return index;
}

void LceIndex::build() {
  const std::size_t n = sequence_.size();
  sa_.assign(n, 0);
  rank_.assign(n, 0);
  lcp_.assign(n, 0);
  if (n == 0) {
    rmq_ = RangeMin(lcp_);
    return;
  }

  std::vector<std::int32_t> ranks(n);
  std::int32_t upper = 0;
  const std::uint32_t top = *std::max_element(sequence_.begin(), sequence_.end());
  if (top <= 4 * n) {
    std::vector<std::int32_t> code(static_cast<std::size_t>(top) + 1, 0);
    for (const std::uint32_t v : sequence_) code[v] = 1;
    std::int32_t next = 0;
    for (auto& c : code) c = c != 0 ? next++ : 0;
    for (std::size_t x = 0; x < n; ++x) ranks[x] = code[sequence_[x]];
    upper = next - 1;
  } else {
    std::vector<std::uint32_t> alphabet(sequence_);
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    for (std::size_t x = 0; x < n; ++x) {
      ranks[x] = static_cast<std::int32_t>(std::lower_bound(alphabet.begin(), alphabet.end(), sequence_[x]) -
                                           alphabet.begin());
    }
    upper = static_cast<std::int32_t>(alphabet.size()) - 1;
  }
  const std::vector<std::int32_t> sa = induced_sort(ranks, upper);
  for (std::size_t r = 0; r < n; ++r) {
    sa_[r] = static_cast<std::uint32_t>(sa[r]);
    rank_[sa_[r]] = static_cast<std::uint32_t>(r);
  }

  // Kasai.
  std::size_t h = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint32_t r = rank_[x];
    if (r == 0) {
      h = 0;
      continue;
    }
    const std::size_t y = sa_[r - 1];
    while (x + h < n && y + h < n && sequence_[x + h] == sequence_[y + h]) ++h;
    lcp_[r] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  rmq_ = RangeMin(lcp_);
}

index_t LceIndex::lce(index_t p, index_t q) const {
  const index_t n = size();
  if (p < 1 || q < 1 || p > n || q > n) throw std::out_of_range("lce position out of range");
  if (p == q) return n - p + 1;
  std::uint32_t a = rank_[static_cast<std::size_t>(p - 1)];
  std::uint32_t b = rank_[static_cast<std::size_t>(q - 1)];
  if (a > b) std::swap(a, b);
  return rmq_.query(a + 1, b);
}

namespace {

std::vector<symbol_t> complemented_reverse(const Text& text, const ComplementMap& map) {
  std::vector<symbol_t> out;
  out.reserve(static_cast<std::size_t>(text.size()));
  for (index_t k = text.size(); k >= 1; --k) out.push_back(map(text[k]));
  return out;
}

}  // namespace

OutwardLce::OutwardLce(const Text& text, const ComplementMap& map) : n_(text.size()) {
  const std::vector<symbol_t> back = complemented_reverse(text, map);
  const std::span<const symbol_t> parts[] = {text.symbols(), back};
  index_ = LceIndex::concatenate(parts);
}

index_t OutwardLce::arm(Center center) const {
  if (center.t < 1 || center.t > 2 * n_ - 1) throw std::out_of_range("center out of range");
  // Right arm starts at floor(c)+1, left arm at ceil(c)-1.
  const index_t left = center.integral() ? (center.t + 1) / 2 - 1 : center.t / 2;
  const index_t right = center.integral() ? left + 2 : left + 1;
  // f(T[left]) sits at 2n+2-left inside T $ f(rev T) #.
  return index_.lce(right, 2 * n_ + 2 - left);
}

index_t outward_lce_theta(const Text& text, const ComplementMap& map, Center center) {
  return OutwardLce(text, map).arm(center);
}

}  // namespace genpal
