// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>

#include "genpal/checkers.hpp"
#include "genpal/rev_engine.hpp"

namespace genpal {

Counters& Counters::operator+=(const Counters& o) {
  copies += o.copies;
  extension_attempts += o.extension_attempts;
  extension_successes += o.extension_successes;
  zero_pushes += o.zero_pushes;
  zero_pops += o.zero_pops;
  rebase_tokens += o.rebase_tokens;
  zero_probes += o.zero_probes;
  rebases += o.rebases;
  min_witness_violations += o.min_witness_violations;
  return *this;
}

ThetaChecker::ThetaChecker(const Text& text, const ComplementMap& map) : text_(text), map_(map) {
  if (!map.covers(text)) throw std::domain_error("complement map does not cover the text alphabet");
}

ParamChecker::ParamChecker(const Text& text, const StaticSymbols& statics)
    : n_(text.size()), pe_(prev_encoding(text, statics)), pe_rev_(prev_encoding(text.reversed(), statics)) {}

bool ParamChecker::try_extend(index_t i, index_t j) const {
  // Last entries of PE(T[i-1..j+1]) and PE(rev T[i-1..j+1]).
  const index_t len = j - i + 3;
  return pe_window(pe_, i - 1, len) == pe_window(pe_rev_, n_ - j, len);
}

CtChecker::CtChecker(const Text& text, Counters& counters)
    : text_(text),
      counters_(counters),
      n_(text.size()),
      pd_(parent_distance(text)),
      pd_rev_(parent_distance(text.reversed())) {}

bool CtChecker::base_odd(index_t c) {
  zeros_.clear();
  floor_ = 0;
  zeros_.push_back(c);
  ++counters_.zero_pushes;
  i_ = j_ = c;
  return true;
}

void CtChecker::base_even(index_t k) {
  zeros_.clear();
  floor_ = 0;
  i_ = k + 1;
  j_ = k;
}

void CtChecker::rebase(index_t i, index_t j) {
  if (j != j_ || i < i_ || i > j + 1) throw std::logic_error("ct rebase must shrink the current window from the left");
  ++counters_.rebases;
  if (active_min_ != 0 && i <= active_min_) ++counters_.min_witness_violations;
  // Right-to-left minima relative to a fixed right end survive left truncation.
  while (floor_ < zeros_.size() && zeros_[floor_] < i) {
    ++floor_;
    ++counters_.rebase_tokens;
  }
  i_ = i;
}

namespace {

// Length of the prefix of offsets 0..size-1 on which `holds` is true, given
// that it is true on a prefix. Exponential then binary search.
template <class Pred>
index_t true_prefix(index_t size, Pred holds, std::uint64_t& probes) {
  index_t lo = 0;
  index_t hi = size;
  for (index_t step = 1; lo < hi; step <<= 1) {
    const index_t probe = std::min(lo + step - 1, hi - 1);
    ++probes;
    if (!holds(probe)) {
      hi = probe;
      break;
    }
    lo = probe + 1;
  }
  while (lo < hi) {
    const index_t mid = lo + (hi - lo) / 2;
    ++probes;
    if (holds(mid)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

bool CtChecker::try_extend(index_t i, index_t j) {
  if (i != i_ || j != j_) throw std::logic_error("ct extension requested for a stale window");
  const index_t len = j - i + 3;
  const index_t fwd_last = pd_[static_cast<std::size_t>(j)];          // PD_T[j+1]
  const index_t bwd_last = pd_rev_[static_cast<std::size_t>(n_ - i + 1)];  // PD_rev[n-i+2]
  if ((fwd_last < len ? fwd_last : 0) != (bwd_last < len ? bwd_last : 0)) return false;

  const symbol_t x = text_[i - 1];
  const symbol_t y = text_[j + 1];
  const index_t zeros = zero_count();
  const index_t fwd_pops =
      true_prefix(zeros, [&](index_t k) { return x <= text_[i + j - zero_from_top(k)]; }, counters_.zero_probes);
  const index_t bwd_pops =
      true_prefix(zeros, [&](index_t k) { return y <= text_[zero_from_top(k)]; }, counters_.zero_probes);
  if (fwd_pops != bwd_pops) return false;

  zeros_.resize(zeros_.size() - static_cast<std::size_t>(bwd_pops));
  counters_.zero_pops += static_cast<std::uint64_t>(bwd_pops);
  zeros_.push_back(j + 1);
  ++counters_.zero_pushes;
  i_ = i - 1;
  j_ = j + 1;
  return true;
}

void CtChecker::activate(index_t, index_t) { active_min_ = zero_count() > 0 ? zeros_[floor_] : 0; }

std::vector<index_t> CtChecker::backward_zeros() const {
  std::vector<index_t> out;
  for (index_t k = 0; k < zero_count(); ++k) out.push_back(zero_from_top(k));
  return out;
}

std::vector<index_t> CtChecker::forward_zeros() const {
  std::vector<index_t> out;
  for (index_t k = 0; k < zero_count(); ++k) out.push_back(i_ + j_ - zero_from_top(k));
  return out;
}

std::uint32_t PalstructLists::token(index_t pos) const {
  const auto p = static_cast<std::size_t>(pos - 1);
  return p < start_seq.size() ? start_seq[p] : end_seq[p - start_seq.size()];
}

PalstructLists build_palstruct_lists(const CenterArray& exact) {
  PalstructLists lists;
  const index_t n = exact.text_length();
  lists.n = n;
  const auto slots = static_cast<std::size_t>(n + 1);
  std::vector<index_t> starts(slots, 0);
  std::vector<index_t> ends(slots, 0);
  for (index_t t = 1; t <= exact.centers(); ++t) {
    if (exact[t] == 0) continue;
    const Window w = exact.window(t);
    ++starts[static_cast<std::size_t>(w.i)];
    ++ends[static_cast<std::size_t>(w.j)];
  }

  lists.start_offset.assign(slots, 0);
  lists.end_offset.assign(slots, 0);
  index_t start_total = 0;
  index_t end_total = 0;
  for (index_t p = 1; p <= n; ++p) {
    lists.start_offset[static_cast<std::size_t>(p)] = start_total + 1;
    start_total += starts[static_cast<std::size_t>(p)] + 1;
  }
  for (index_t p = 1; p <= n; ++p) {
    lists.end_offset[static_cast<std::size_t>(p)] = start_total + end_total + 1;
    end_total += ends[static_cast<std::size_t>(p)] + 1;
  }
  lists.start_seq.assign(static_cast<std::size_t>(start_total), 0);
  lists.end_seq.assign(static_cast<std::size_t>(end_total), 0);

  // Lengths starting at a fixed position grow with t; lengths ending at a fixed
  // position shrink with t. Fill each list front to back.
  std::vector<index_t> cursor(slots);
  for (index_t p = 1; p <= n; ++p) cursor[static_cast<std::size_t>(p)] = lists.start_offset[static_cast<std::size_t>(p)] - 1;
  for (index_t t = 1; t <= exact.centers(); ++t) {
    if (exact[t] == 0) continue;
    const Window w = exact.window(t);
    lists.start_seq[static_cast<std::size_t>(cursor[static_cast<std::size_t>(w.i)]++)] = static_cast<std::uint32_t>(w.length());
  }
  for (index_t p = 1; p <= n; ++p) {
    lists.start_seq[static_cast<std::size_t>(cursor[static_cast<std::size_t>(p)])] = static_cast<std::uint32_t>(n + p);
    cursor[static_cast<std::size_t>(p)] = lists.end_offset[static_cast<std::size_t>(p)] - 1 - start_total;
  }
  for (index_t t = exact.centers(); t >= 1; --t) {
    if (exact[t] == 0) continue;
    const Window w = exact.window(t);
    lists.end_seq[static_cast<std::size_t>(cursor[static_cast<std::size_t>(w.j)]++)] = static_cast<std::uint32_t>(w.length());
  }
  for (index_t p = 1; p <= n; ++p) {
    lists.end_seq[static_cast<std::size_t>(cursor[static_cast<std::size_t>(p)])] = static_cast<std::uint32_t>(2 * n + p);
  }

  std::vector<std::uint32_t> combined(lists.start_seq);
  combined.insert(combined.end(), lists.end_seq.begin(), lists.end_seq.end());
  lists.index = LceIndex(std::move(combined));
  return lists;
}

PalstructLists build_palstruct_lists(const Text& text) { return build_palstruct_lists(scan_rev(text, Model::exact())); }

bool PalstructChecker::try_extend(index_t i, index_t j) const {
  if ((text_[i - 1] == text_[i]) != (text_[j] == text_[j + 1])) return false;
  const index_t threshold = j - i;
  if (threshold < 1) return true;
  const index_t a = lists_.start_offset[static_cast<std::size_t>(i)];
  const index_t b = lists_.end_offset[static_cast<std::size_t>(j)];
  const index_t common = lists_.index.lce(a, b);
  return lists_.token(a + common) > threshold && lists_.token(b + common) > threshold;
}

CenterArray scan_rev(const Text& text, const Model& model, Counters& counters) {
  const index_t n = text.size();
  switch (model.kind) {
    case ModelKind::exact:
    case ModelKind::op: {
      ExactChecker checker(text);
      return manacher_scan(n, checker, counters);
    }
    case ModelKind::theta: {
      ThetaChecker checker(text, model.complement);
      return manacher_scan(n, checker, counters);
    }
    case ModelKind::param: {
      ParamChecker checker(text, model.statics);
      return manacher_scan(n, checker, counters);
    }
    case ModelKind::ct: {
      CtChecker checker(text, counters);
      return manacher_scan(n, checker, counters);
    }
    case ModelKind::palstruct: {
      ExactChecker exact_checker(text);
      const PalstructLists lists = build_palstruct_lists(manacher_scan(n, exact_checker, counters));
      PalstructChecker checker(text, lists);
      return manacher_scan(n, checker, counters);
    }
  }
  throw std::invalid_argument("unknown model");
}

CenterArray scan_rev(const Text& text, const Model& model) {
  Counters ignored;
  return scan_rev(text, model, ignored);
}

CenterArray scan_rev_op(const Text& text) { return scan_rev(text, Model::op()); }

}  // namespace genpal
