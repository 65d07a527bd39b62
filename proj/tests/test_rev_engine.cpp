// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "genpal/checkers.hpp"
#include "genpal/oracle.hpp"
#include "genpal/rev_engine.hpp"

using namespace genpal;

namespace {

Text bytes(const char* s) { return Text::from_bytes(s); }

CenterArray array_of(std::initializer_list<index_t> lengths) {
  CenterArray a((static_cast<index_t>(lengths.size()) + 1) / 2);
  index_t t = 1;
  for (index_t v : lengths) a[t++] = v;
  return a;
}

Text random_text(std::mt19937_64& rng, std::size_t len, symbol_t sigma) {
  std::vector<symbol_t> s(len);
  for (auto& x : s) x = static_cast<symbol_t>(rng() % sigma);
  return Text(s);
}

std::vector<Model> rev_models(symbol_t sigma) {
  return {Model::exact(), Model::theta(ComplementMap::adjacent_pairs(std::max<symbol_t>(sigma, 2))), Model::param(),
          Model::op(),    Model::ct(),
          Model::palstruct()};
}

// Positions p in [i..j] with T[q] > T[p] for every q in (p..j], nearest to j first.
std::vector<index_t> naive_backward_zeros(const Text& t, index_t i, index_t j) {
  std::vector<index_t> out;
  for (index_t p = j; p >= i; --p) {
    bool zero = true;
    for (index_t q = p + 1; q <= j; ++q) zero = zero && t[q] > t[p];
    if (zero) out.push_back(p);
  }
  return out;
}

// Positions p in [i..j] with T[q] > T[p] for every q in [i..p), nearest to i first.
std::vector<index_t> naive_forward_zeros(const Text& t, index_t i, index_t j) {
  std::vector<index_t> out;
  for (index_t p = i; p <= j; ++p) {
    bool zero = true;
    for (index_t q = i; q < p; ++q) zero = zero && t[q] > t[p];
    if (zero) out.push_back(p);
  }
  return out;
}

// Checks the zero lists against a recomputation after every state change.
struct AuditingCtChecker {
  const Text& text;
  CtChecker inner;
  std::size_t audits = 0;

  void audit() {
    const Window w = inner.window();
    REQUIRE(inner.backward_zeros() == naive_backward_zeros(text, w.i, w.j));
    REQUIRE(inner.forward_zeros() == naive_forward_zeros(text, w.i, w.j));
    ++audits;
  }
  bool base_odd(index_t c) {
    const bool ok = inner.base_odd(c);
    audit();
    return ok;
  }
  void base_even(index_t k) {
    inner.base_even(k);
    audit();
  }
  void rebase(index_t i, index_t j) {
    inner.rebase(i, j);
    audit();
  }
  bool try_extend(index_t i, index_t j) {
    const auto before = inner.backward_zeros();
    const bool ok = inner.try_extend(i, j);
    if (!ok) REQUIRE(inner.backward_zeros() == before);
    audit();
    return ok;
  }
  void activate(index_t i, index_t j) { inner.activate(i, j); }
};

}  // namespace

TEST_CASE("exact rev scan") {
  CHECK(scan_rev(bytes("abaaa"), Model::exact()) == array_of({1, 0, 3, 0, 1, 2, 3, 2, 1}));
  CHECK(scan_rev(bytes("aaaa"), Model::exact()) == array_of({1, 2, 3, 4, 3, 2, 1}));
  CHECK(scan_rev(Text{}, Model::exact()).centers() == 0);
  CHECK(scan_rev(bytes("a"), Model::exact()) == array_of({1}));
}

TEST_CASE("theta rev scan") {
  const Model wk = Model::theta(ComplementMap::watson_crick());
  const CenterArray a = scan_rev(bytes("ACGT"), wk);
  CHECK(a == array_of({0, 0, 0, 4, 0, 0, 0}));
  CHECK(a == oracle::maximal_array_bruteforce(bytes("ACGT"), wk, Definition::rev));
  CHECK(scan_rev(bytes("A"), wk) == array_of({0}));
  CHECK_THROWS_AS(scan_rev(Text({0, 5}), Model::theta(ComplementMap::identity(2))), std::domain_error);
}

TEST_CASE("theta extension check") {
  const Text t = bytes("TACGTA");
  const ThetaChecker check(t, ComplementMap::watson_crick());
  CHECK(check.try_extend(3, 4));
  CHECK(check.base_odd(1) == false);
  const ThetaChecker id(t, ComplementMap::identity(256));
  CHECK(id.base_odd(1));
  CHECK(id.try_extend(2, 5) == (t[1] == t[6]));
}

TEST_CASE("param rev scan") {
  const CenterArray a = scan_rev(bytes("CACB"), Model::param());
  CHECK(a[4] < 4);
  CHECK(a == oracle::maximal_array_bruteforce(bytes("CACB"), Model::param(), Definition::rev));
  const Text cacb = bytes("CACB");
  const ParamChecker check(cacb, {});
  CHECK(check.try_extend(2, 3) == false);
  CHECK(check.try_extend(3, 2));  // empty to length 2 always extends
}

TEST_CASE("param extension on the worked window") {
  const Text t = bytes("caacaebdbbd");
  REQUIRE(oracle::is_rev_palindrome(t.substr(2, 10), Model::param()));
  const PEArray fwd = prev_encoding(t);
  const PEArray bwd = prev_encoding(t.reversed());
  CHECK(pe_window(fwd, 1, 11) == 3);
  CHECK(pe_window(bwd, 1, 11) == 3);
  const ParamChecker check(t, {});
  CHECK(check.try_extend(2, 10));
  CHECK(oracle::is_rev_palindrome(t, Model::param()));
}

TEST_CASE("op rev scan coincides with exact") {
  CHECK(scan_rev_op(bytes("abaaa")) == array_of({1, 0, 3, 0, 1, 2, 3, 2, 1}));
  CHECK(scan_rev_op(bytes("ab")) == array_of({1, 0, 1}));
  CHECK(scan_rev_op(bytes("aaaa")) == array_of({1, 2, 3, 4, 3, 2, 1}));
  CHECK(oracle::maximal_array_bruteforce(bytes("ab"), Model::op(), Definition::rev) == array_of({1, 0, 1}));
}

TEST_CASE("ct extension on the worked window") {
  const Text t = bytes("becaebdaefc");
  Counters counters;
  CtChecker check(t, counters);
  REQUIRE(check.base_odd(6));
  for (index_t r = 0; r < 4; ++r) REQUIRE(check.try_extend(6 - r, 6 + r));
  CHECK(check.window() == Window{2, 10});
  CHECK(check.forward_zeros() == std::vector<index_t>{2, 3, 4});  // e, c, a
  const bool extends = check.try_extend(2, 10);
  CHECK(extends == oracle::is_rev_palindrome(t, Model::ct()));
  CHECK(parent_distance(t) == PDArray{0, 1, 2, 0, 1, 2, 1, 4, 1, 1, 3});
}

TEST_CASE("ct base cases") {
  Counters counters;
  const Text ab = bytes("ab");
  CtChecker check(ab, counters);
  check.base_even(1);
  CHECK(check.try_extend(2, 1) == false);
  const Text aa = bytes("aa");
  CtChecker same(aa, counters);
  same.base_even(1);
  CHECK(same.try_extend(2, 1));
  CHECK(oracle::scsttr_equal(bytes("aaaa"), bytes("abcd"), Model::ct()));
  CHECK_FALSE(oracle::scsttr_equal(bytes("aaaa"), bytes("dcba"), Model::ct()));
}

TEST_CASE("ct rebase truncates from the left") {
  Counters counters;
  const Text t = bytes("abcab");
  CtChecker check(t, counters);
  REQUIRE(check.base_odd(3));
  CHECK_THROWS_AS(check.rebase(3, 2), std::logic_error);
  CHECK_THROWS_AS(check.try_extend(1, 5), std::logic_error);
}

TEST_CASE("ct zero lists stay exact through a whole scan") {
  std::mt19937_64 rng(41);
  std::size_t audits = 0;
  for (int round = 0; round < 400; ++round) {
    const Text t = random_text(rng, rng() % 40, 1 + static_cast<symbol_t>(rng() % 5));
    Counters counters;
    AuditingCtChecker checker{t, CtChecker(t, counters)};
    const CenterArray got = manacher_scan(t.size(), checker, counters);
    REQUIRE(got == oracle::maximal_array_bruteforce(t, Model::ct(), Definition::rev));
    audits += checker.audits;
  }
  CHECK(audits > 1000);
}

TEST_CASE("palstruct lists") {
  const PalstructLists lists = build_palstruct_lists(bytes("abaaa"));
  const std::vector<std::uint32_t> end_seq{1, 11, 12, 1, 3, 13, 2, 14, 1, 2, 3, 15};
  const std::vector<std::uint32_t> start_seq{1, 3, 6, 7, 1, 2, 3, 8, 2, 9, 1, 10};
  CHECK(lists.end_seq == end_seq);
  CHECK(lists.start_seq == start_seq);
  CHECK(lists.is_delimiter(11));
  CHECK_FALSE(lists.is_delimiter(5));

  CHECK(build_palstruct_lists(bytes("a")).end_seq == std::vector<std::uint32_t>{1, 3});
  const PalstructLists abc = build_palstruct_lists(bytes("abc"));
  CHECK(abc.start_seq == std::vector<std::uint32_t>{1, 4, 1, 5, 1, 6});
  CHECK(abc.end_seq == std::vector<std::uint32_t>{1, 7, 1, 8, 1, 9});
}

TEST_CASE("palstruct extension") {
  const Text aba = bytes("aba");
  const PalstructLists lists = build_palstruct_lists(aba);
  const PalstructChecker check(aba, lists);
  CHECK(check.try_extend(2, 2));
  CHECK(oracle::scsttr_equal(bytes("aabacdca"), bytes("ccacdadc"), Model::palstruct()));
  const Text abb = bytes("abb");
  const PalstructLists abb_lists = build_palstruct_lists(abb);
  CHECK_FALSE(PalstructChecker(abb, abb_lists).try_extend(2, 2));
}

TEST_CASE("every model agrees with the oracle on all short binary strings") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (std::uint32_t code = 0; code < (1U << len); ++code) {
      std::vector<symbol_t> s(len);
      for (std::size_t k = 0; k < len; ++k) s[k] = (code >> k) & 1U;
      const Text t(s);
      for (const Model& m : rev_models(2)) {
        REQUIRE(scan_rev(t, m) == oracle::maximal_array_bruteforce(t, m, Definition::rev));
      }
    }
  }
}

TEST_CASE("every model agrees with the oracle on random strings") {
  std::mt19937_64 rng(43);
  for (const symbol_t sigma : {1U, 2U, 4U, 26U}) {
    for (int round = 0; round < 150; ++round) {
      const Text t = random_text(rng, rng() % 48, sigma);
      for (const Model& m : rev_models(sigma)) {
        REQUIRE(scan_rev(t, m) == oracle::maximal_array_bruteforce(t, m, Definition::rev));
      }
    }
  }
}

TEST_CASE("exact lengths are dominated by every equivalence model") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 300; ++round) {
    const Text t = random_text(rng, rng() % 64, 1 + static_cast<symbol_t>(rng() % 5));
    const CenterArray exact = scan_rev(t, Model::exact());
    for (const Model& m : {Model::param(), Model::op(), Model::ct(), Model::palstruct()}) {
      const CenterArray a = scan_rev(t, m);
      for (index_t c = 1; c <= a.centers(); ++c) REQUIRE(exact[c] <= a[c]);
    }
  }
}

TEST_CASE("central clipping and mirrored sub-palindromes") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 60; ++round) {
    const Text t = random_text(rng, 1 + rng() % 16, 2);
    for (const Model& m : rev_models(2)) {
      const CenterArray a = scan_rev(t, m);
      for (index_t c = 1; c <= a.centers(); ++c) {
        if (a[c] == 0) continue;
        const Window w = a.window(c);
        for (index_t d = 0; 2 * d < w.length(); ++d) {
          REQUIRE(oracle::is_rev_palindrome(t.substr(w.i + d, w.j - d), m));
        }
        // Sub-palindromes inside w reappear at the mirrored position.
        for (index_t i = w.i; i <= w.j; ++i) {
          for (index_t j = i; j <= w.j; ++j) {
            if (!oracle::is_rev_palindrome(t.substr(i, j), m)) continue;
            REQUIRE(oracle::is_rev_palindrome(t.substr(w.i + w.j - j, w.i + w.j - i), m));
          }
        }
      }
    }
  }
}

TEST_CASE("counters") {
  std::mt19937_64 rng(59);
  for (int round = 0; round < 200; ++round) {
    const auto n = static_cast<index_t>(1 + rng() % 300);
    const Text t = random_text(rng, static_cast<std::size_t>(n), 1 + static_cast<symbol_t>(rng() % 4));
    for (const Model& m : rev_models(4)) {
      Counters c;
      scan_rev(t, m, c);
      if (m.kind == ModelKind::palstruct) continue;  // also counts its exact pre-pass
      CHECK(c.extension_attempts + c.copies <= static_cast<std::uint64_t>(4 * n));
      CHECK(c.zero_pops <= c.zero_pushes);
    }
  }
}

TEST_CASE("ct on permutations: pops bounded and rebases start after the window minimum") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 100; ++round) {
    std::vector<symbol_t> s(1 + rng() % 500);
    std::iota(s.begin(), s.end(), 0U);
    std::shuffle(s.begin(), s.end(), rng);
    Counters c;
    scan_rev(Text(s), Model::ct(), c);
    CHECK(c.zero_pops <= 2 * s.size());
    CHECK(c.min_witness_violations == 0);
  }
}
