// SPDX-License-Identifier: Apache-2.0

#include "genpal/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace genpal {

Text::Text(std::vector<symbol_t> symbols, AlphabetKind kind) : symbols_(std::move(symbols)), kind_(kind) {
  if (symbols_.empty()) return;
  bound_ = *std::max_element(symbols_.begin(), symbols_.end()) + 1;
  std::vector<bool> seen(bound_, false);
  for (symbol_t s : symbols_) {
    if (!seen[s]) {
      seen[s] = true;
      ++sigma_;
    }
  }
}

Text Text::from_bytes(std::string_view bytes) {
  std::vector<symbol_t> symbols(bytes.size());
  std::transform(bytes.begin(), bytes.end(), symbols.begin(),
                 [](char ch) { return static_cast<symbol_t>(static_cast<unsigned char>(ch)); });
  return Text(std::move(symbols), AlphabetKind::byte);
}

symbol_t Text::at(index_t pos) const {
  if (pos < 1 || pos > size()) throw std::out_of_range("text position " + std::to_string(pos) + " out of range");
  return (*this)[pos];
}

Text Text::reversed() const {
  return Text(std::vector<symbol_t>(symbols_.rbegin(), symbols_.rend()), kind_);
}

Text Text::substr(index_t i, index_t j) const {
  if (i > j) return Text({}, kind_);
  if (i < 1 || j > size()) throw std::out_of_range("substring bounds out of range");
  return Text(std::vector<symbol_t>(symbols_.begin() + (i - 1), symbols_.begin() + j), kind_);
}

std::string Text::to_string() const {
  std::string out;
  if (kind_ == AlphabetKind::byte) {
    out.reserve(symbols_.size());
    for (symbol_t s : symbols_) out.push_back(static_cast<char>(s));
    return out;
  }
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (k) out.push_back(' ');
    out += std::to_string(symbols_[k]);
  }
  return out;
}

Text rank_compress(std::span<const std::int64_t> tokens) {
  std::vector<std::int64_t> sorted(tokens.begin(), tokens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<symbol_t> ranks(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    ranks[k] = static_cast<symbol_t>(std::lower_bound(sorted.begin(), sorted.end(), tokens[k]) - sorted.begin());
  }
  return Text(std::move(ranks), AlphabetKind::tokenized);
}

Window window_of(Center center, index_t length, index_t n) {
  const index_t t = center.t;
  if (t < 1 || t > 2 * n - 1) throw std::out_of_range("center out of range");
  if (length < 0) throw std::out_of_range("negative palindrome length");
  if (length == 0) {
    // Empty window: [k+1..k] at half center k+0.5, [c..c-1] at integer center c.
    const index_t c2 = t + 1;
    return center.integral() ? Window{c2 / 2, c2 / 2 - 1} : Window{c2 / 2 + 1, c2 / 2};
  }
  if (((t + length) & 1) != 0) throw std::invalid_argument("length parity does not match center parity");
  const Window w{(t + 2 - length) / 2, (t + length) / 2};
  if (w.i < 1 || w.j > n) throw std::out_of_range("palindrome window exceeds the text");
  return w;
}

Center center_of(Window w) {
  if (w.length() < 0) throw std::invalid_argument("malformed window");
  return Center{w.i + w.j - 1};
}

Center mirror_center(Center c_prime, Center c) {
  if (c.t <= c_prime.t) throw std::invalid_argument("mirror_center requires c > c'");
  const Center m{2 * c_prime.t - c.t};
  if (m.t < 1) throw std::out_of_range("mirrored center falls before the text");
  return m;
}

CenterArray::CenterArray(index_t n) : n_(n), lengths_(static_cast<std::size_t>(n > 0 ? 2 * n - 1 : 0), 0) {}

index_t CenterArray::at(Center c) const {
  if (c.t < 1 || c.t > centers()) throw std::out_of_range("center out of range");
  return (*this)[c.t];
}

std::string to_string(const CenterArray& a) {
  std::string out = "[";
  for (index_t t = 1; t <= a.centers(); ++t) {
    if (t > 1) out += ',';
    out += std::to_string(a[t]);
  }
  return out + "]";
}

}  // namespace genpal
