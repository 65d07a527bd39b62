// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_BENCH_HPP
#define GENPAL_BENCH_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "genpal/core.hpp"
#include "genpal/model.hpp"
#include "genpal/rev_engine.hpp"

namespace genpal {

/// random: uniform over `alphabet` symbols. runs: runs of geometric length (mean 8),
/// each a symbol different from the previous run. unary: a^n. alternating: (ab)^(n/2).
/// dna: uniform over the bytes ACGT. perm: a random permutation of 0..n-1.
enum class Generator { random, runs, unary, alternating, dna, perm };

std::string_view to_string(Generator g);
Generator parse_generator(std::string_view name);

Text generate(Generator g, index_t n, std::mt19937_64& rng, symbol_t alphabet = 4);

/// The complement map used for theta on generated texts: Watson-Crick on byte
/// texts, adjacent pairs otherwise.
ComplementMap default_complement(const Text& text);

struct BenchRow {
  index_t n = 0;
  double seconds = 0;  // fastest single run
  Counters counters;   // of the first text; rev definition only

  [[nodiscard]] double work_per_symbol() const { return static_cast<double>(counters.work()) / static_cast<double>(n); }
  [[nodiscard]] double ns_per_symbol() const { return seconds * 1e9 / static_cast<double>(n); }
};

struct BenchConfig {
  Model model;  // theta: the map is replaced by default_complement of each text
  Definition definition = Definition::rev;
  Direction direction = Direction::outward;
  Generator generator = Generator::random;
  int min_exponent = 10;
  int max_exponent = 20;
  std::uint64_t seed = 1;
  symbol_t alphabet = 4;
  double min_seconds = 0.05;  // per round: repeat each size until this much time has been spent
  int min_repeats = 3;         // per round
  int max_repeats = 2000;      // per round
  int rounds = 1;              // passes over all sizes; each size keeps its fastest run
};

/// One row per n = 2^min_exponent .. 2^max_exponent.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Indices k >= 1 where value(rows[k]) / value(rows[k-1]) leaves [1/(1+tol), 1+tol].
template <class F>
std::vector<std::size_t> nonlinear_steps(const std::vector<BenchRow>& rows, F value, double tolerance = 0.25) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double prev = value(rows[k - 1]);
    const double cur = value(rows[k]);
    if (prev <= 0 && cur <= 0) continue;
    const double ratio = prev > 0 ? cur / prev : 1e300;
    if (ratio > 1 + tolerance || ratio < 1 / (1 + tolerance)) out.push_back(k);
  }
  return out;
}

}  // namespace genpal

#endif  // GENPAL_BENCH_HPP
