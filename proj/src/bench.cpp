// SPDX-License-Identifier: Apache-2.0

#include "genpal/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "genpal/scan.hpp"
#include "genpal/sym_engine.hpp"

namespace genpal {

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::random:
      return "random";
    case Generator::runs:
      return "runs";
    case Generator::unary:
      return "unary";
    case Generator::alternating:
      return "alternating";
    case Generator::dna:
      return "dna";
    case Generator::perm:
      return "perm";
  }
  return "?";
}

Generator parse_generator(std::string_view name) {
  if (name == "random") return Generator::random;
  if (name == "runs") return Generator::runs;
  if (name == "unary") return Generator::unary;
  if (name == "alternating") return Generator::alternating;
  if (name == "dna") return Generator::dna;
  if (name == "perm") return Generator::perm;
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

Text generate(Generator g, index_t n, std::mt19937_64& rng, symbol_t alphabet) {
  const auto size = static_cast<std::size_t>(n);
  std::vector<symbol_t> s(size);
  switch (g) {
    case Generator::random: {
      std::uniform_int_distribution<symbol_t> pick(0, alphabet - 1);
      for (auto& x : s) x = pick(rng);
      break;
    }
    case Generator::runs: {
      std::geometric_distribution<std::size_t> length(1.0 / 8);
      std::uniform_int_distribution<symbol_t> shift(1, std::max<symbol_t>(alphabet, 2) - 1);
      const symbol_t sigma = std::max<symbol_t>(alphabet, 2);
      symbol_t current = 0;
      for (std::size_t k = 0; k < size;) {
        const std::size_t end = std::min(size, k + 1 + length(rng));
        for (; k < end; ++k) s[k] = current;
        current = (current + shift(rng)) % sigma;
      }
      break;
    }
    case Generator::unary:
      break;
    case Generator::alternating:
      for (std::size_t k = 0; k < size; ++k) s[k] = static_cast<symbol_t>(k & 1);
      break;
    case Generator::dna: {
      static constexpr char kBases[] = "ACGT";
      std::uniform_int_distribution<int> pick(0, 3);
      std::string bytes(size, 'A');
      for (auto& ch : bytes) ch = kBases[pick(rng)];
      return Text::from_bytes(bytes);
    }
    case Generator::perm:
      std::iota(s.begin(), s.end(), symbol_t{0});
      std::shuffle(s.begin(), s.end(), rng);
      break;
  }
  return Text(std::move(s));
}

ComplementMap default_complement(const Text& text) {
  if (text.alphabet_kind() == AlphabetKind::byte) return ComplementMap::watson_crick();
  return ComplementMap::adjacent_pairs(std::max<symbol_t>(text.alphabet_bound(), 1));
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  validate(config.model, config.definition, config.direction);
  std::mt19937_64 rng(config.seed);
  std::vector<BenchRow> rows;
  for (int e = config.min_exponent; e <= config.max_exponent; ++e) {
    BenchRow row;
    row.n = index_t{1} << e;
    row.seconds = 1e300;
    rows.push_back(row);
  }
  for (int round = 0; round < std::max(config.rounds, 1); ++round) {
    for (BenchRow& row : rows) {
      double spent = 0;
      // A fresh text per repetition keeps branch predictors from learning the input.
      for (int rep = 0; rep < config.max_repeats && (rep < config.min_repeats || spent < config.min_seconds); ++rep) {
        const Text text = generate(config.generator, row.n, rng, config.alphabet);
        Model model = config.model;
        if (model.kind == ModelKind::theta) model.complement = default_complement(text);
        Counters counters;
        const auto start = std::chrono::steady_clock::now();
        if (config.definition == Definition::rev) {
          scan_rev(text, model, counters);
        } else {
          scan_sym(text, model, config.direction);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        spent += secs;
        row.seconds = std::min(row.seconds, secs);
        if (round == 0 && rep == 0) row.counters = counters;
      }
    }
  }
  return rows;
}

}  // namespace genpal
