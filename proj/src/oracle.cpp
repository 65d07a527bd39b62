// SPDX-License-Identifier: Apache-2.0

#include "genpal/oracle.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace genpal::oracle {
namespace {

bool param_equal(const Text& x, const Text& y, const StaticSymbols& statics) {
  std::unordered_map<symbol_t, symbol_t> forward;
  std::unordered_map<symbol_t, symbol_t> backward;
  for (index_t k = 1; k <= x.size(); ++k) {
    const symbol_t a = x[k];
    const symbol_t b = y[k];
    if (statics.contains(a) || statics.contains(b)) {
      if (a != b) return false;
      continue;
    }
    const auto [f, f_new] = forward.emplace(a, b);
    const auto [g, g_new] = backward.emplace(b, a);
    if (f->second != b || g->second != a) return false;
  }
  return true;
}

int compare(symbol_t a, symbol_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

bool op_equal(const Text& x, const Text& y) {
  for (index_t p = 1; p <= x.size(); ++p) {
    for (index_t q = p + 1; q <= x.size(); ++q) {
      if (compare(x[p], x[q]) != compare(y[p], y[q])) return false;
    }
  }
  return true;
}

index_t leftmost_min(const Text& x, index_t lo, index_t hi) {
  index_t best = lo;
  for (index_t k = lo + 1; k <= hi; ++k) {
    if (x[k] < x[best]) best = k;
  }
  return best;
}

// Cartesian trees rooted at the leftmost minimum have the same shape on [lo..hi].
bool same_tree(const Text& x, const Text& y, index_t lo, index_t hi) {
  if (lo >= hi) return true;
  const index_t root = leftmost_min(x, lo, hi);
  if (root != leftmost_min(y, lo, hi)) return false;
  return same_tree(x, y, lo, root - 1) && same_tree(x, y, root + 1, hi);
}

// Exact maximal-palindrome radii by expansion around each center.
std::vector<index_t> palindrome_radii(const Text& x) {
  const index_t n = x.size();
  std::vector<index_t> out;
  for (index_t t = 1; t <= 2 * n - 1; ++t) {
    index_t i = (t & 1) ? (t + 1) / 2 - 1 : t / 2;
    index_t j = (t & 1) ? i + 2 : i + 1;
    index_t r = 0;
    while (i >= 1 && j <= n && x[i] == x[j]) {
      --i;
      ++j;
      ++r;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

bool scsttr_equal(const Text& x, const Text& y, const Model& model) {
  if (x.size() != y.size()) return false;
  switch (model.kind) {
    case ModelKind::exact:
      return x == y;
    case ModelKind::theta:
      for (index_t k = 1; k <= x.size(); ++k) {
        if (x[k] != model.complement(y[k])) return false;
      }
      return true;
    case ModelKind::param:
      return param_equal(x, y, model.statics);
    case ModelKind::op:
      return op_equal(x, y);
    case ModelKind::ct:
      return same_tree(x, y, 1, x.size());
    case ModelKind::palstruct:
      return palindrome_radii(x) == palindrome_radii(y);
  }
  throw std::invalid_argument("unknown model");
}

bool is_rev_palindrome(const Text& x, const Model& model) { return scsttr_equal(x, x.reversed(), model); }

bool is_sym_palindrome(const Text& x, const Model& model, Direction direction) {
  if (direction == Direction::inward && model.kind != ModelKind::ct) {
    throw std::invalid_argument("inward direction is only defined for the ct model");
  }
  const index_t arm = x.size() / 2;
  const Text left = x.substr(1, arm);
  const Text right = x.substr(x.size() - arm + 1, x.size());
  if (direction == Direction::outward) return scsttr_equal(left.reversed(), right, model);
  return scsttr_equal(left, right.reversed(), model);
}

CenterArray maximal_array_bruteforce(const Text& text, const Model& model, Definition definition,
                                     Direction direction) {
  const index_t n = text.size();
  const auto holds = [&](index_t t, index_t length) {
    const Window w = window_of(Center{t}, length, n);
    const Text piece = text.substr(w.i, w.j);
    return definition == Definition::rev ? is_rev_palindrome(piece, model)
                                         : is_sym_palindrome(piece, model, direction);
  };
  CenterArray out(n);
  for (index_t t = 1; t <= out.centers(); ++t) {
    index_t length = (t & 1) ? 1 : 0;
    if (!holds(t, length)) {
      out[t] = 0;
      continue;
    }
    // Stop at the first window that does not extend.
    while (true) {
      const Window w = window_of(Center{t}, length, n);
      if (w.i <= 1 || w.j >= n || !holds(t, length + 2)) break;
      length += 2;
    }
    out[t] = length;
  }
  return out;
}

}  // namespace genpal::oracle
