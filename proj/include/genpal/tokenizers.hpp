// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_TOKENIZERS_HPP
#define GENPAL_TOKENIZERS_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "genpal/core.hpp"
#include "genpal/encodings.hpp"
#include "genpal/model.hpp"

namespace genpal {

/// Online model encodings: append one symbol, get the encoding entry of the new
/// last position. The entry depends only on the prefix appended so far, so two
/// streams give equal tokens for k steps iff their k-prefixes match.
template <class T>
concept ArmTokenizer = requires(T t, symbol_t s) {
  t.reset();
  { t.append(s) } -> std::equality_comparable;
};

class ExactTokenizer {
 public:
  void reset() {}
  symbol_t append(symbol_t s) const { return s; }
};

/// The left arm emits f(symbol), the right arm the symbol itself.
class ThetaTokenizer {
 public:
  ThetaTokenizer(const ComplementMap& map, bool complemented) : map_(&map), complemented_(complemented) {}
  void reset() {}
  symbol_t append(symbol_t s) const { return complemented_ ? (*map_)(s) : s; }

 private:
  const ComplementMap* map_;
  bool complemented_;
};

/// PE entries via a last-occurrence table.
class ParamTokenizer {
 public:
  ParamTokenizer(symbol_t alphabet_bound, const StaticSymbols& statics)
      : statics_(&statics), last_(alphabet_bound, 0) {}
  void reset();
  std::int64_t append(symbol_t s);

 private:
  const StaticSymbols* statics_;
  std::vector<index_t> last_;
  std::vector<symbol_t> touched_;
  index_t length_ = 0;
};

/// (alpha, beta) entries via an ordered symbol -> latest position map.
class OpTokenizer {
 public:
  void reset();
  std::pair<index_t, index_t> append(symbol_t s);

 private:
  std::map<symbol_t, index_t> latest_;
  index_t length_ = 0;
};

/// PD entries via a monotonic stack.
class CtTokenizer {
 public:
  void reset();
  index_t append(symbol_t s);

 private:
  std::vector<std::pair<symbol_t, index_t>> stack_;
  index_t length_ = 0;
};

/// LPal entries via a palindromic tree over the appended symbols.
class PalstructTokenizer {
 public:
  PalstructTokenizer() { reset(); }
  void reset();
  index_t append(symbol_t s);

 private:
  struct Node {
    index_t length;
    std::int32_t link;
  };
  std::vector<symbol_t> symbols_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, std::int32_t> edges_;
  std::int32_t last_ = 1;

  [[nodiscard]] std::int32_t edge(std::int32_t node, symbol_t s) const;
  [[nodiscard]] std::int32_t extendable(std::int32_t node, std::size_t pos, symbol_t s) const;
};

/// Tokens of `symbols` fed one by one to a fresh tokenizer of `model`, widened to
/// a common pair representation.
std::vector<std::pair<std::int64_t, std::int64_t>> tokenize(const Model& model, std::span<const symbol_t> symbols,
                                                            bool complemented = false);

}  // namespace genpal

#endif  // GENPAL_TOKENIZERS_HPP
