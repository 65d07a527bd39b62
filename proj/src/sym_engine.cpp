// SPDX-License-Identifier: Apache-2.0

#include "genpal/sym_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "genpal/encodings.hpp"
#include "genpal/lce.hpp"
#include "genpal/tokenizers.hpp"

namespace genpal {
namespace {

// Nearest positions left and right of the center that belong to the arms.
struct ArmStarts {
  index_t left;
  index_t right;
};

ArmStarts arm_starts(Center c) {
  if (c.integral()) {
    const index_t mid = (c.t + 1) / 2;
    return {mid - 1, mid + 1};
  }
  return {c.t / 2, c.t / 2 + 1};
}

index_t length_from_arm(Center c, index_t arm) { return 2 * arm + (c.integral() ? 1 : 0); }

template <ArmTokenizer L, ArmTokenizer R>
CenterArray outward_scan(const Text& text, L left, R right) {
  const index_t n = text.size();
  CenterArray out(n);
  for (index_t t = 1; t <= out.centers(); ++t) {
    const ArmStarts s = arm_starts(Center{t});
    left.reset();
    right.reset();
    index_t arm = 0;
    while (s.left - arm >= 1 && s.right + arm <= n) {
      if (!(left.append(text[s.left - arm]) == right.append(text[s.right + arm]))) break;
      ++arm;
    }
    out[t] = length_from_arm(Center{t}, arm);
  }
  return out;
}

CenterArray lce_scan(const Text& text, const ComplementMap& map) {
  const index_t n = text.size();
  CenterArray out(n);
  if (n == 0) return out;
  const OutwardLce lce(text, map);
  for (index_t t = 1; t <= out.centers(); ++t) out[t] = length_from_arm(Center{t}, lce.arm(Center{t}));
  return out;
}

struct InwardProbe {
  const Text& text;
  const PDArray& pd;
  const PDArray& pd_rev;

  // X = T[left-r+1..left] against rev(Y), Y = T[right..right+r-1].
  bool matches(const ArmStarts& s, index_t r) const {
    const index_t n = text.size();
    const index_t xi = s.left - r + 1;
    const index_t yi = n - s.right - r + 2;
    for (index_t k = 1; k <= r; ++k) {
      if (pd_window(pd, xi, s.left, k) != pd_window(pd_rev, yi, yi + r - 1, k)) return false;
    }
    return true;
  }

  index_t arm(Center c) const {
    const ArmStarts s = arm_starts(c);
    const index_t limit = std::min(s.left, text.size() - s.right + 1);
    index_t lo = 0;  // known to match
    index_t hi = limit + 1;  // known not to match (or past the limit)
    for (index_t step = 1; lo + 1 < hi; step <<= 1) {
      const index_t probe = std::min(lo + step, hi - 1);
      if (!matches(s, probe)) {
        hi = probe;
        break;
      }
      lo = probe;
    }
    while (lo + 1 < hi) {
      const index_t mid = lo + (hi - lo) / 2;
      if (matches(s, mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  }
};

}  // namespace

SymScanResult scan_sym(const Text& text, const Model& model, Direction direction) {
  if (direction == Direction::inward) {
    if (model.kind != ModelKind::ct) throw std::invalid_argument("inward direction is only defined for the ct model");
    return scan_sym_ct_inward(text);
  }
  SymScanResult result{CenterArray(text.size()), Direction::outward};
  switch (model.kind) {
    case ModelKind::exact:
      result.lengths = lce_scan(text, ComplementMap::identity(text.alphabet_bound()));
      break;
    case ModelKind::theta:
      if (!model.complement.covers(text)) throw std::domain_error("complement map does not cover the text alphabet");
      result.lengths = lce_scan(text, model.complement);
      break;
    case ModelKind::param:
      result.lengths = outward_scan(text, ParamTokenizer(text.alphabet_bound(), model.statics),
                                    ParamTokenizer(text.alphabet_bound(), model.statics));
      break;
    case ModelKind::op:
      result.lengths = outward_scan(text, OpTokenizer{}, OpTokenizer{});
      break;
    case ModelKind::ct:
      result.lengths = outward_scan(text, CtTokenizer{}, CtTokenizer{});
      break;
    case ModelKind::palstruct:
      result.lengths = outward_scan(text, PalstructTokenizer{}, PalstructTokenizer{});
      break;
  }
  return result;
}

index_t ct_inward_arm(const Text& text, Center center) {
  if (center.t < 1 || center.t > 2 * text.size() - 1) throw std::out_of_range("center out of range");
  const PDArray pd = parent_distance(text);
  const PDArray pd_rev = parent_distance(text.reversed());
  return InwardProbe{text, pd, pd_rev}.arm(center);
}

SymScanResult scan_sym_ct_inward(const Text& text) {
  SymScanResult result{CenterArray(text.size()), Direction::inward};
  const PDArray pd = parent_distance(text);
  const PDArray pd_rev = parent_distance(text.reversed());
  const InwardProbe probe{text, pd, pd_rev};
  for (index_t t = 1; t <= result.lengths.centers(); ++t) {
    result.lengths[t] = length_from_arm(Center{t}, probe.arm(Center{t}));
  }
  return result;
}

}  // namespace genpal
