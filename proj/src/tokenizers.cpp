// SPDX-License-Identifier: Apache-2.0

#include "genpal/tokenizers.hpp"

#include <algorithm>
#include <stdexcept>

namespace genpal {

void ParamTokenizer::reset() {
  for (symbol_t s : touched_) last_[s] = 0;
  touched_.clear();
  length_ = 0;
}

std::int64_t ParamTokenizer::append(symbol_t s) {
  ++length_;
  if (statics_->contains(s)) return static_marker(s);
  if (s >= last_.size()) last_.resize(s + 1, 0);
  const index_t prev = last_[s];
  if (prev == 0) touched_.push_back(s);
  last_[s] = length_;
  return prev ? length_ - prev : 0;
}

void OpTokenizer::reset() {
  latest_.clear();
  length_ = 0;
}

std::pair<index_t, index_t> OpTokenizer::append(symbol_t s) {
  ++length_;
  auto succ = latest_.lower_bound(s);
  auto pred = latest_.upper_bound(s);
  const index_t alpha = pred == latest_.begin() ? 0 : std::prev(pred)->second;
  const index_t beta = succ == latest_.end() ? 0 : succ->second;
  latest_[s] = length_;
  return {alpha, beta};
}

void CtTokenizer::reset() {
  stack_.clear();
  length_ = 0;
}

index_t CtTokenizer::append(symbol_t s) {
  ++length_;
  while (!stack_.empty() && stack_.back().first > s) stack_.pop_back();
  const index_t pd = stack_.empty() ? 0 : length_ - stack_.back().second;
  stack_.emplace_back(s, length_);
  return pd;
}

void PalstructTokenizer::reset() {
  symbols_.clear();
  edges_.clear();
  // Node 0: imaginary root of length -1. Node 1: empty palindrome.
  nodes_.assign({Node{-1, 0}, Node{0, 0}});
  last_ = 1;
}

std::int32_t PalstructTokenizer::edge(std::int32_t node, symbol_t s) const {
  const auto it = edges_.find((static_cast<std::uint64_t>(node) << 32) | s);
  return it == edges_.end() ? -1 : it->second;
}

// Walks suffix links from `node` to the longest suffix palindrome that can be
// wrapped by `s` at position `pos`.
std::int32_t PalstructTokenizer::extendable(std::int32_t node, std::size_t pos, symbol_t s) const {
  for (;;) {
    const index_t len = nodes_[static_cast<std::size_t>(node)].length;
    const auto before = static_cast<index_t>(pos) - 1 - len;
    if (before >= 0 && symbols_[static_cast<std::size_t>(before)] == s) return node;
    node = nodes_[static_cast<std::size_t>(node)].link;
  }
}

index_t PalstructTokenizer::append(symbol_t s) {
  const std::size_t pos = symbols_.size();
  symbols_.push_back(s);
  const std::int32_t parent = extendable(last_, pos, s);
  std::int32_t child = edge(parent, s);
  if (child < 0) {
    const index_t len = nodes_[static_cast<std::size_t>(parent)].length + 2;
    const std::int32_t link = len == 1 ? 1 : edge(extendable(nodes_[static_cast<std::size_t>(parent)].link, pos, s), s);
    child = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(Node{len, link});
    edges_.emplace((static_cast<std::uint64_t>(parent) << 32) | s, child);
  }
  last_ = child;
  return nodes_[static_cast<std::size_t>(child)].length;
}

namespace {

template <class Tok>
std::vector<std::pair<std::int64_t, std::int64_t>> run(Tok tok, std::span<const symbol_t> symbols) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  tok.reset();
  for (symbol_t s : symbols) {
    const auto token = tok.append(s);
    if constexpr (requires { token.first; }) {
      out.emplace_back(token.first, token.second);
    } else {
      out.emplace_back(static_cast<std::int64_t>(token), 0);
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> tokenize(const Model& model, std::span<const symbol_t> symbols,
                                                            bool complemented) {
  switch (model.kind) {
    case ModelKind::exact:
      return run(ExactTokenizer{}, symbols);
    case ModelKind::theta:
      return run(ThetaTokenizer(model.complement, complemented), symbols);
    case ModelKind::param: {
      const symbol_t bound = symbols.empty() ? 0 : *std::max_element(symbols.begin(), symbols.end()) + 1;
      return run(ParamTokenizer(bound, model.statics), symbols);
    }
    case ModelKind::op:
      return run(OpTokenizer{}, symbols);
    case ModelKind::ct:
      return run(CtTokenizer{}, symbols);
    case ModelKind::palstruct:
      return run(PalstructTokenizer{}, symbols);
  }
  throw std::invalid_argument("unknown model");
}

}  // namespace genpal
