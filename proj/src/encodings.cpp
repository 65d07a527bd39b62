// SPDX-License-Identifier: Apache-2.0

#include "genpal/encodings.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "genpal/model.hpp"
#include "genpal/rev_engine.hpp"

namespace genpal {

ComplementMap::ComplementMap(std::vector<symbol_t> image) : image_(std::move(image)) {
  for (std::size_t s = 0; s < image_.size(); ++s) {
    const symbol_t img = image_[s];
    if (img >= image_.size() || image_[img] != s) {
      throw std::invalid_argument("complement map is not an involution at symbol " + std::to_string(s));
    }
  }
}

ComplementMap ComplementMap::identity(symbol_t size) {
  std::vector<symbol_t> image(size);
  for (symbol_t s = 0; s < size; ++s) image[s] = s;
  return ComplementMap(std::move(image));
}

ComplementMap ComplementMap::watson_crick() {
  std::vector<symbol_t> image(256);
  for (symbol_t s = 0; s < 256; ++s) image[s] = s;
  image['A'] = 'T';
  image['T'] = 'A';
  image['C'] = 'G';
  image['G'] = 'C';
  return ComplementMap(std::move(image));
}

ComplementMap ComplementMap::adjacent_pairs(symbol_t size) {
  std::vector<symbol_t> image(size);
  for (symbol_t s = 0; s < size; ++s) image[s] = (s ^ 1U) < size ? (s ^ 1U) : s;
  return ComplementMap(std::move(image));
}

symbol_t ComplementMap::operator()(symbol_t s) const {
  if (s >= image_.size()) throw std::domain_error("symbol " + std::to_string(s) + " outside the complement map");
  return image_[s];
}

Text complement_apply(const ComplementMap& map, const Text& text) {
  std::vector<symbol_t> out(text.symbols().begin(), text.symbols().end());
  for (symbol_t& s : out) s = map(s);
  return Text(std::move(out), text.alphabet_kind());
}

StaticSymbols::StaticSymbols(std::span<const symbol_t> symbols) {
  for (symbol_t s : symbols) {
    if (s >= mask_.size()) mask_.resize(s + 1, false);
    if (!mask_[s]) {
      mask_[s] = true;
      ++count_;
    }
  }
}

PEArray prev_encoding(const Text& text, const StaticSymbols& statics) {
  const index_t n = text.size();
  PEArray pe(static_cast<std::size_t>(n));
  std::vector<index_t> last(text.alphabet_bound(), 0);
  for (index_t k = 1; k <= n; ++k) {
    const symbol_t s = text[k];
    if (statics.contains(s)) {
      pe[k - 1] = static_marker(s);
      continue;
    }
    pe[k - 1] = last[s] ? k - last[s] : 0;
    last[s] = k;
  }
  return pe;
}

std::int64_t pe_window(std::span<const std::int64_t> pe, index_t i, index_t k) {
  const auto n = static_cast<index_t>(pe.size());
  if (i < 1 || k < 1 || i + k - 1 > n) throw std::out_of_range("pe_window out of range");
  const std::int64_t v = pe[static_cast<std::size_t>(i + k - 2)];
  if (is_static_marker(v)) return v;
  return v < k ? v : 0;
}

CodeArray op_code(const Text& text) {
  const index_t n = text.size();
  CodeArray code(static_cast<std::size_t>(n));
  std::map<symbol_t, index_t> latest;
  for (index_t k = 1; k <= n; ++k) {
    const symbol_t s = text[k];
    auto succ = latest.lower_bound(s);
    auto pred = latest.upper_bound(s);
    const index_t alpha = pred == latest.begin() ? 0 : std::prev(pred)->second;
    const index_t beta = succ == latest.end() ? 0 : succ->second;
    code[k - 1] = {alpha, beta};
    latest[s] = k;
  }
  return code;
}

PDArray parent_distance(const Text& text) {
  const index_t n = text.size();
  PDArray pd(static_cast<std::size_t>(n));
  std::vector<index_t> stack;
  for (index_t k = 1; k <= n; ++k) {
    while (!stack.empty() && text[stack.back()] > text[k]) stack.pop_back();
    pd[k - 1] = stack.empty() ? 0 : k - stack.back();
    stack.push_back(k);
  }
  return pd;
}

index_t pd_window(std::span<const index_t> pd, index_t i, index_t j, index_t k) {
  const auto n = static_cast<index_t>(pd.size());
  if (i < 1 || k < 1 || i + k - 1 > j || j > n) throw std::out_of_range("pd_window out of range");
  const index_t v = pd[static_cast<std::size_t>(i + k - 2)];
  return v < k ? v : 0;
}

LPalArray lpal_from_maximal(const CenterArray& exact) {
  const index_t n = exact.text_length();
  LPalArray out(static_cast<std::size_t>(n));
  // The longest palindrome ending at k sits at the smallest center t <= 2k-1
  // whose maximal palindrome reaches k, i.e. t + MPal[t] >= 2k. That center
  // never moves left as k grows.
  index_t t = 1;
  for (index_t k = 1; k <= n; ++k) {
    while (t + exact[t] < 2 * k) ++t;
    out[k - 1] = 2 * k - t;
  }
  return out;
}

LPalArray lpal(const Text& text) { return lpal_from_maximal(scan_rev(text, Model::exact())); }

}  // namespace genpal
