// SPDX-License-Identifier: Apache-2.0

// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <malloc.h>

#include <bitset>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "genpal/bench.hpp"
#include "genpal/checkers.hpp"
#include "genpal/encodings.hpp"
#include "genpal/oracle.hpp"
#include "genpal/rev_engine.hpp"
#include "genpal/scan.hpp"
#include "genpal/sym_engine.hpp"

using namespace genpal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2fs)", secs);
  std::cout << buf;
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
}

Text bytes(const char* s) { return Text::from_bytes(s); }

struct Config {
  std::string name;
  Model model;
  Definition definition;
  Direction direction;
};

std::vector<Config> configurations() {
  std::vector<Config> out;
  const auto theta = Model::theta(ComplementMap::adjacent_pairs(26));
  for (const Definition d : {Definition::rev, Definition::sym}) {
    const std::string suffix = d == Definition::rev ? " rev" : " sym";
    out.push_back({"exact" + suffix, Model::exact(), d, Direction::outward});
    out.push_back({"theta" + suffix, theta, d, Direction::outward});
    out.push_back({"param" + suffix, Model::param(), d, Direction::outward});
    out.push_back({"op" + suffix, Model::op(), d, Direction::outward});
    out.push_back({"ct" + suffix, Model::ct(), d, Direction::outward});
    out.push_back({"palstruct" + suffix, Model::palstruct(), d, Direction::outward});
  }
  out.push_back({"ct sym inward", Model::ct(), Definition::sym, Direction::inward});
  return out;
}

// All binary strings of length <= 10, then 1000 seeded strings of length <= 64
// for each alphabet size 1, 2, 4, 26.
std::vector<Text> corpus() {
  std::vector<Text> out;
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::uint32_t code = 0; code < (1U << len); ++code) {
      std::vector<symbol_t> s(len);
      for (std::size_t k = 0; k < len; ++k) s[k] = (code >> k) & 1U;
      out.emplace_back(s);
    }
  }
  std::mt19937_64 rng(20240601);
  for (const symbol_t sigma : {1U, 2U, 4U, 26U}) {
    std::uniform_int_distribution<std::size_t> length(0, 64);
    std::uniform_int_distribution<symbol_t> pick(0, sigma - 1);
    for (int k = 0; k < 1000; ++k) {
      std::vector<symbol_t> s(length(rng));
      for (auto& x : s) x = pick(rng);
      out.emplace_back(s);
    }
  }
  return out;
}

bool dominated(const CenterArray& low, const CenterArray& high) {
  for (index_t c = 1; c <= low.centers(); ++c) {
    if (low[c] > high[c]) return false;
  }
  return true;
}

std::string describe(const Text& t) { return "on [" + t.to_string() + "]"; }

Outcome criterion_1() {
  Outcome o;
  const symbol_t c_static[] = {'C'};
  const StaticSymbols statics(c_static);
  const std::int64_t c = static_marker('C');
  o.expect(prev_encoding(bytes("aabaCbC"), statics) == PEArray{0, 1, 0, 2, c, 3, c}, "PE(aabaCbC)");
  o.expect(op_code(bytes("cecag")) == CodeArray{{0, 0}, {1, 0}, {1, 1}, {0, 3}, {2, 0}}, "Code(cecag)");
  o.expect(parent_distance(bytes("cabdcf")) == PDArray{0, 0, 1, 1, 2, 1}, "PD(cabdcf)");
  o.expect(lpal(bytes("aabacdca")) == LPalArray{1, 2, 1, 3, 1, 1, 3, 5}, "LPal(aabacdca)");
  o.expect(prev_encoding(bytes("ddadCaC"), statics) == prev_encoding(bytes("aabaCbC"), statics), "PE partner");
  o.expect(op_code(bytes("hohbr")) == op_code(bytes("cecag")), "Code partner");
  o.expect(parent_distance(bytes("eaacbc")) == parent_distance(bytes("cabdcf")), "PD partner");
  o.expect(lpal(bytes("ccacdadc")) == lpal(bytes("aabacdca")), "LPal partner");
  o.expect(oracle::scsttr_equal(bytes("aabaCbC"), bytes("ddadCaC"), Model::param(statics)), "param relation");
  o.expect(oracle::scsttr_equal(bytes("cecag"), bytes("hohbr"), Model::op()), "op relation");
  o.expect(oracle::scsttr_equal(bytes("cabdcf"), bytes("eaacbc"), Model::ct()), "ct relation");
  o.expect(oracle::scsttr_equal(bytes("aabacdca"), bytes("ccacdadc"), Model::palstruct()), "palstruct relation");
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const Model wk = Model::theta(ComplementMap::watson_crick());
  const Text attgaat = bytes("ATTGAAT");
  const Text cacb = bytes("CACB");
  o.expect(oracle::is_sym_palindrome(attgaat, wk), "ATTGAAT WK sym (oracle)");
  o.expect(!oracle::is_rev_palindrome(attgaat, wk), "ATTGAAT not WK rev (oracle)");
  o.expect(scan_sym(attgaat, wk).lengths[7] == 7, "ATTGAAT WK sym (engine)");
  o.expect(scan_rev(attgaat, wk)[7] < 7, "ATTGAAT not WK rev (engine)");
  o.expect(oracle::is_sym_palindrome(cacb, Model::param()), "CACB param sym (oracle)");
  o.expect(!oracle::is_rev_palindrome(cacb, Model::param()), "CACB not param rev (oracle)");
  o.expect(scan_sym(cacb, Model::param()).lengths[4] == 4, "CACB param sym (engine)");
  o.expect(scan_rev(cacb, Model::param())[4] < 4, "CACB not param rev (engine)");
  o.expect(oracle::scsttr_equal(bytes("aaaa"), bytes("abcd"), Model::ct()), "aaaa ~ct abcd");
  o.expect(!oracle::scsttr_equal(bytes("aaaa"), bytes("dcba"), Model::ct()), "aaaa !~ct dcba");
  o.expect(parent_distance(bytes("aaaa")) == parent_distance(bytes("abcd")), "PD(aaaa) = PD(abcd)");
  o.expect(parent_distance(bytes("aaaa")) != parent_distance(bytes("dcba")), "PD(aaaa) != PD(dcba)");
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const PalstructLists lists = build_palstruct_lists(bytes("abaaa"));
  // 1 $1 $2 1 3 $3 2 $4 1 2 3 $5 with $p encoded as 2n + p.
  const std::vector<std::uint32_t> expected{1, 11, 12, 1, 3, 13, 2, 14, 1, 2, 3, 15};
  o.expect(lists.end_seq == expected, "end-position list sequence");
  for (std::size_t k = 0; k < expected.size(); ++k) {
    o.expect(lists.is_delimiter(lists.end_seq[k]) == (expected[k] > 5), "delimiter positions");
  }
  return o;
}

struct CorpusResults {
  std::vector<Text> texts;
  std::vector<Config> configs;
  std::vector<std::vector<CenterArray>> arrays;  // [config][text]
};

Outcome criterion_4(CorpusResults& r) {
  Outcome o;
  r.texts = corpus();
  r.configs = configurations();
  r.arrays.assign(r.configs.size(), {});
  std::size_t mismatches = 0;
  for (std::size_t c = 0; c < r.configs.size(); ++c) {
    const Config& cfg = r.configs[c];
    for (const Text& t : r.texts) {
      CenterArray got = maximal_palindromes(t, cfg.model, cfg.definition, cfg.direction);
      if (!(got == oracle::maximal_array_bruteforce(t, cfg.model, cfg.definition, cfg.direction))) {
        if (mismatches++ == 0) o.expect(false, cfg.name + " " + describe(t));
      }
      r.arrays[c].push_back(std::move(got));
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(r.configs.size()) + " configurations x " +
              std::to_string(r.texts.size()) + " strings, " + std::to_string(mismatches) + " mismatches";
  return o;
}

std::size_t config_index(const CorpusResults& r, const std::string& name) {
  for (std::size_t c = 0; c < r.configs.size(); ++c) {
    if (r.configs[c].name == name) return c;
  }
  throw std::logic_error("unknown configuration " + name);
}

Outcome criterion_5(const CorpusResults& r) {
  Outcome o;
  const auto& exact = r.arrays.at(config_index(r, "exact rev"));
  const auto& op = r.arrays.at(config_index(r, "op rev"));
  for (std::size_t k = 0; k < r.texts.size(); ++k) {
    o.expect(op[k] == exact[k], "op rev != exact rev " + describe(r.texts[k]));
    o.expect(scan_rev_op(r.texts[k]) == exact[k], "scan_rev_op " + describe(r.texts[k]));
  }
  return o;
}

Outcome criterion_6(const CorpusResults& r) {
  Outcome o;
  const auto& rev = r.arrays.at(config_index(r, "exact rev"));
  const auto& sym = r.arrays.at(config_index(r, "exact sym"));
  for (std::size_t k = 0; k < r.texts.size(); ++k) o.expect(rev[k] == sym[k], describe(r.texts[k]));
  return o;
}

Outcome criterion_7(const CorpusResults& r) {
  Outcome o;
  for (const char* model : {"param", "op", "ct", "palstruct"}) {
    for (const char* def : {" rev", " sym"}) {
      const auto& exact = r.arrays.at(config_index(r, std::string("exact") + def));
      const auto& other = r.arrays.at(config_index(r, model + std::string(def)));
      for (std::size_t k = 0; k < r.texts.size(); ++k) {
        o.expect(dominated(exact[k], other[k]), std::string("exact <= ") + model + def + " " + describe(r.texts[k]));
      }
    }
  }
  for (const char* model : {"exact", "theta", "param", "op", "palstruct"}) {
    const auto& rev = r.arrays.at(config_index(r, model + std::string(" rev")));
    const auto& sym = r.arrays.at(config_index(r, model + std::string(" sym")));
    for (std::size_t k = 0; k < r.texts.size(); ++k) {
      o.expect(dominated(rev[k], sym[k]), std::string(model) + " rev <= sym " + describe(r.texts[k]));
    }
  }
  const auto& ct_rev = r.arrays.at(config_index(r, "ct rev"));
  const auto& ct_in = r.arrays.at(config_index(r, "ct sym inward"));
  for (std::size_t k = 0; k < r.texts.size(); ++k) {
    o.expect(dominated(ct_rev[k], ct_in[k]), "ct rev <= ct inward " + describe(r.texts[k]));
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  std::ostringstream summary;
  double worst_work = 1;
  double worst_time = 1;
  const auto ratio = [](double a, double b) { return std::max(a / b, b / a); };
  for (const Model& model : {Model::theta({}), Model::param(), Model::ct(), Model::palstruct()}) {
    for (const Generator g : {Generator::random, Generator::runs, Generator::unary, Generator::alternating, Generator::dna}) {
      BenchConfig config;
      config.model = model;
      config.generator = g;
      config.min_exponent = 10;
      config.max_exponent = 20;
      config.seed = 977;
      // Sizes are sampled in interleaved rounds so that one slow phase of a shared host cannot decide a step.
      config.rounds = 4;
      config.min_seconds = 0.05;
      const std::vector<BenchRow> rows = run_bench(config);
      const std::string name = std::string(to_string(model.kind)) + "/" + std::string(to_string(g));
      for (std::size_t k = 1; k < rows.size(); ++k) {
        worst_work = std::max(worst_work, ratio(rows[k].work_per_symbol(), rows[k - 1].work_per_symbol()));
        worst_time = std::max(worst_time, ratio(rows[k].ns_per_symbol(), rows[k - 1].ns_per_symbol()));
      }
      for (std::size_t k : nonlinear_steps(rows, [](const BenchRow& r) { return r.work_per_symbol(); })) {
        o.expect(false, name + " work/n changes by more than 25% from n=" + std::to_string(rows[k - 1].n));
      }
      for (std::size_t k : nonlinear_steps(rows, [](const BenchRow& r) { return r.ns_per_symbol(); })) {
        o.expect(false, name + " time/n changes by more than 25% from n=" + std::to_string(rows[k - 1].n) + " (" +
                            std::to_string(rows[k - 1].ns_per_symbol()) + " -> " +
                            std::to_string(rows[k].ns_per_symbol()) + " ns)");
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "worst step ratio: work %.3f, time %.3f", worst_work, worst_time);
  o.detail += (o.detail.empty() ? "" : "; ") + std::string(buf);
  return o;
}

Outcome criterion_9(const CorpusResults& r) {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uint64_t rebases = 0;
  for (int e = 4; e <= 16; ++e) {
    for (int rep = 0; rep < 4; ++rep) {
      const Text perm = generate(Generator::perm, index_t{1} << e, rng);
      Counters c;
      scan_rev(perm, Model::ct(), c);
      rebases += c.rebases;
      o.expect(c.zero_pops <= 2 * static_cast<std::uint64_t>(perm.size()), "sum U > 2n on a permutation");
      o.expect(c.min_witness_violations == 0, "a rebase started at or before the window minimum");
    }
  }
  const auto general = [&](const Text& t) {
    Counters c;
    scan_rev(t, Model::ct(), c);
    o.expect(c.zero_pops <= c.zero_pushes, "sum U > Z0 + sum E " + describe(t));
  };
  for (const Text& t : r.texts) general(t);
  for (const Generator g : {Generator::random, Generator::runs, Generator::unary, Generator::alternating, Generator::dna}) {
    general(generate(g, 1 << 16, rng));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(rebases) + " rebases on permutations";
  return o;
}

// Relation over all strings of one length as a bit matrix.
template <std::size_t N>
Outcome axioms_for(const Model& m, const std::string& name, std::size_t len, std::vector<std::bitset<N>>& rel) {
  Outcome o;
  std::vector<Text> strings;
  std::size_t count = 1;
  for (std::size_t k = 0; k < len; ++k) count *= 3;
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<symbol_t> s(len);
    for (std::size_t k = 0, c = code; k < len; ++k, c /= 3) s[k] = static_cast<symbol_t>(c % 3);
    strings.emplace_back(s);
  }
  rel.assign(count, {});
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) rel[a][b] = oracle::scsttr_equal(strings[a], strings[b], m);
  }
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (rel[a][b] != rel[b][a]) o.expect(false, name + " symmetry " + describe(strings[a]));
      if (!rel[a][b]) continue;
      for (std::size_t i = 1; i <= len; ++i) {
        for (std::size_t j = i; j <= len; ++j) {
          const auto ii = static_cast<index_t>(i);
          const auto jj = static_cast<index_t>(j);
          if (!oracle::scsttr_equal(strings[a].substr(ii, jj), strings[b].substr(ii, jj), m)) {
            o.expect(false, name + " substring consistency " + describe(strings[a]));
          }
        }
      }
    }
  }
  // Two-transitivity: W~X, X~Y, Y~Z implies W~Z, i.e. R o R o R is inside R.
  std::vector<std::bitset<N>> two(count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (rel[a][b]) two[a] |= rel[b];
    }
  }
  for (std::size_t a = 0; a < count; ++a) {
    std::bitset<N> three;
    for (std::size_t b = 0; b < count; ++b) {
      if (two[a][b]) three |= rel[b];
    }
    if ((three & ~rel[a]).any()) o.expect(false, name + " two-transitivity " + describe(strings[a]));
  }
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const symbol_t st[] = {2};
  const std::vector<std::pair<std::string, Model>> models{
      {"exact", Model::exact()},
      {"theta", Model::theta(ComplementMap::adjacent_pairs(3))},
      {"theta-id", Model::theta(ComplementMap::identity(3))},
      {"param", Model::param()},
      {"param-static", Model::param(StaticSymbols(st))},
      {"op", Model::op()},
      {"ct", Model::ct()},
      {"palstruct", Model::palstruct()}};
  std::vector<std::bitset<243>> rel;
  for (const auto& [name, m] : models) {
    for (std::size_t len = 0; len <= 5; ++len) {
      const Outcome part = axioms_for<243>(m, name, len, rel);
      o.expect(part.pass, part.detail);
    }
  }
  return o;
}

}  // namespace

int main() {
  // Keep freed memory in the heap so repeated bench runs do not re-fault pages.
  mallopt(M_MMAP_THRESHOLD, 32 << 20);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);

  CorpusResults corpus_results;
  report(1, "reference encoding vectors and partner strings", criterion_1);
  report(2, "discriminating rev/sym and ct examples", criterion_2);
  report(3, "palindromic-structure list encoding of abaaa", criterion_3);
  report(4, "engines equal the brute-force oracle on the corpus", [&] { return criterion_4(corpus_results); });
  report(5, "order-preserving rev equals exact rev", [&] { return criterion_5(corpus_results); });
  report(6, "exact sym equals exact rev", [&] { return criterion_6(corpus_results); });
  report(7, "pointwise dominance", [&] { return criterion_7(corpus_results); });
  report(8, "rev engines: work and time per symbol stable over n = 2^10..2^20", criterion_8);
  report(9, "Cartesian-tree amortization witnesses", [&] { return criterion_9(corpus_results); });
  report(10, "symmetry, two-transitivity and substring consistency", criterion_10);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
