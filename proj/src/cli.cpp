// SPDX-License-Identifier: Apache-2.0

#include "genpal/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "genpal/bench.hpp"
#include "genpal/oracle.hpp"
#include "genpal/scan.hpp"
#include "json.hpp"

namespace genpal::cli {
namespace {

using nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::int64_t parse_integer(std::string_view word) {
  std::int64_t value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw InputError("malformed integer token '" + std::string(word) + "'");
  return value;
}

ComplementMap build_map(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs, symbol_t size) {
  for (const auto& [x, y] : pairs) {
    if (x < 0 || y < 0) throw std::invalid_argument("map symbols must be non-negative");
  }
  for (const auto& [x, y] : pairs) size = std::max<symbol_t>(size, static_cast<symbol_t>(std::max(x, y) + 1));
  std::vector<symbol_t> image(size);
  for (symbol_t s = 0; s < size; ++s) image[s] = s;
  for (const auto& [x, y] : pairs) {
    const auto a = static_cast<symbol_t>(x);
    const auto b = static_cast<symbol_t>(y);
    if ((image[a] != a && image[a] != b) || (image[b] != b && image[b] != a)) {
      throw std::invalid_argument("complement map is not an involution: conflicting pairs for " + std::to_string(x) +
                                  ":" + std::to_string(y));
    }
    image[a] = b;
    image[b] = a;
  }
  return ComplementMap(std::move(image));
}

std::vector<symbol_t> to_symbols(std::span<const std::int64_t> values) {
  std::vector<symbol_t> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [](std::int64_t v) { return static_cast<symbol_t>(v); });
  return out;
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot read input '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

std::vector<Record> read_input(const std::string& path, std::istream& in, InputFormat format) {
  std::istringstream content(read_all(path, in));
  switch (format) {
    case InputFormat::raw:
      return read_raw(content);
    case InputFormat::fasta:
      return read_fasta(content);
    case InputFormat::tokens:
      return read_tokens(content);
  }
  return {};
}

void write_tsv(std::ostream& os, const Prepared& p, const CenterArray& lengths) {
  for (index_t t = 1; t <= lengths.centers(); ++t) {
    const Window w = lengths.window(t);
    if (!p.id.empty()) os << p.id << '\t';
    os << t << '\t' << w.i << '\t' << w.j << '\t' << lengths[t] << '\n';
  }
}

void write_json(std::ostream& os, const Prepared& p, const CenterArray& lengths, Definition definition,
                Direction direction) {
  ordered_json doc;
  if (!p.id.empty()) doc["id"] = p.id;
  doc["n"] = p.text.size();
  doc["model"] = to_string(p.model.kind);
  doc["definition"] = to_string(definition);
  doc["direction"] = to_string(direction);
  ordered_json maximal = ordered_json::array();
  for (index_t t = 1; t <= lengths.centers(); ++t) {
    const Window w = lengths.window(t);
    maximal.push_back({{"center2", t}, {"start", w.i}, {"end", w.j}, {"len", lengths[t]}});
  }
  doc["maximal"] = std::move(maximal);
  os << doc.dump() << '\n';
}

struct Options {
  std::string model = "exact";
  std::string definition = "rev";
  std::string direction = "outward";
  std::string input = "-";
  std::string format = "tsv";
  bool fasta = false;
  bool tokens = false;
  std::string map_spec;
  std::string static_spec;
  std::uint64_t seed = 1;
  std::string sizes = "10..20";
  std::string generator = "random";
  index_t max_n = 64;
  index_t cases = 1000;
  int alphabet = 0;
  int rounds = 1;
};

void add_model_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--model", o.model, "exact|theta|param|op|ct|palstruct")
      ->check(CLI::IsMember({"exact", "theta", "param", "op", "ct", "palstruct"}));
  cmd.add_option("--definition", o.definition, "rev|sym")->check(CLI::IsMember({"rev", "sym"}));
  cmd.add_option("--direction", o.direction, "outward|inward (inward: ct sym only)")
      ->check(CLI::IsMember({"outward", "inward"}));
  cmd.add_option("--map", o.map_spec, "complement pairs, e.g. A:T,C:G");
  cmd.add_option("--static", o.static_spec, "static symbols of the param model");
}

int cmd_scan(const Options& o, std::istream& in, std::ostream& out, const Engine& engine) {
  if (o.fasta && o.tokens) throw std::invalid_argument("--fasta and --tokens are exclusive");
  const InputFormat format = o.fasta ? InputFormat::fasta : (o.tokens ? InputFormat::tokens : InputFormat::raw);
  const ModelKind kind = parse_model_kind(o.model);
  const Definition definition = parse_definition(o.definition);
  const Direction direction = parse_direction(o.direction);
  const bool json = o.format == "json";

  const std::vector<Record> records = read_input(o.input, in, format);
  std::vector<Prepared> prepared;
  prepared.reserve(records.size());
  for (const Record& r : records) prepared.push_back(prepare(r, kind, format, o.map_spec, o.static_spec));
  validate(prepared.front().model, definition, direction);

  // One engine run per record; outputs are buffered so record order is kept.
  std::vector<std::string> outputs(prepared.size());
  std::vector<std::exception_ptr> failures(prepared.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < prepared.size(); k = next++) {
      try {
        const CenterArray lengths = engine(prepared[k].text, prepared[k].model, definition, direction);
        std::ostringstream os;
        if (json) {
          write_json(os, prepared[k], lengths, definition, direction);
        } else {
          write_tsv(os, prepared[k], lengths);
        }
        outputs[k] = os.str();
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(prepared.size(), std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  for (const auto& s : outputs) out << s;
  return 0;
}

// Deletes single positions while the mismatch persists.
std::vector<symbol_t> shrink(std::vector<symbol_t> s, const std::function<bool(const std::vector<symbol_t>&)>& fails) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t k = 0; k < s.size(); ++k) {
      std::vector<symbol_t> smaller(s);
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      if (fails(smaller)) {
        s = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return s;
}

int cmd_verify(const Options& o, std::ostream& out, const Engine& engine) {
  const ModelKind kind = parse_model_kind(o.model);
  const Definition definition = parse_definition(o.definition);
  const Direction direction = parse_direction(o.direction);
  if (o.max_n < 0 || o.cases < 0) throw std::invalid_argument("--max-n and --cases must be non-negative");
  if (o.alphabet < 0) throw std::invalid_argument("--alphabet must be positive");

  static constexpr symbol_t kCycle[] = {1, 2, 4, 26};
  const symbol_t widest = o.alphabet > 0 ? static_cast<symbol_t>(o.alphabet) : 26;
  Model model;
  model.kind = kind;
  if (kind == ModelKind::theta) {
    model.complement = o.map_spec.empty() ? ComplementMap::adjacent_pairs(widest)
                                          : build_map(parse_map_spec(o.map_spec, InputFormat::tokens), widest);
  }
  if (kind == ModelKind::param) {
    const std::vector<symbol_t> statics = to_symbols(parse_static_spec(o.static_spec, InputFormat::tokens));
    model.statics = StaticSymbols(statics);
  }
  validate(model, definition, direction);

  const auto fails = [&](const std::vector<symbol_t>& s) {
    const Text text(s);
    return !(engine(text, model, definition, direction) ==
             oracle::maximal_array_bruteforce(text, model, definition, direction));
  };

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<index_t> length(0, o.max_n);
  for (index_t c = 0; c < o.cases; ++c) {
    const symbol_t sigma = o.alphabet > 0 ? widest : kCycle[c % 4];
    std::uniform_int_distribution<symbol_t> pick(0, sigma - 1);
    std::vector<symbol_t> s(static_cast<std::size_t>(length(rng)));
    for (auto& x : s) x = pick(rng);
    if (!fails(s)) continue;
    const Text minimal(shrink(std::move(s), fails));
    out << "mismatch after " << c + 1 << " cases\n";
    out << "counterexample: " << minimal.to_string() << '\n';
    out << "engine: " << to_string(engine(minimal, model, definition, direction)) << '\n';
    out << "oracle: " << to_string(oracle::maximal_array_bruteforce(minimal, model, definition, direction)) << '\n';
    return 1;
  }
  out << "ok: " << o.cases << " cases, " << to_string(kind) << ' ' << to_string(definition) << ' '
      << to_string(direction) << '\n';
  return 0;
}

std::pair<int, int> parse_sizes(std::string_view spec) {
  const auto dots = spec.find("..");
  if (dots == std::string_view::npos) throw std::invalid_argument("--sizes expects A..B");
  const auto lo = parse_integer(spec.substr(0, dots));
  const auto hi = parse_integer(spec.substr(dots + 2));
  if (lo < 0 || hi < lo || hi > 30) throw std::invalid_argument("--sizes expects 0 <= A <= B <= 30");
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

int cmd_bench(const Options& o, std::ostream& out) {
  BenchConfig config;
  config.model.kind = parse_model_kind(o.model);
  if (config.model.kind == ModelKind::param && !o.static_spec.empty()) {
    config.model.statics = StaticSymbols(to_symbols(parse_static_spec(o.static_spec, InputFormat::tokens)));
  }
  config.definition = parse_definition(o.definition);
  config.direction = parse_direction(o.direction);
  config.generator = parse_generator(o.generator);
  std::tie(config.min_exponent, config.max_exponent) = parse_sizes(o.sizes);
  config.seed = o.seed;
  if (o.alphabet < 0) throw std::invalid_argument("--alphabet must be positive");
  if (o.alphabet > 0) config.alphabet = static_cast<symbol_t>(o.alphabet);
  if (o.rounds < 1) throw std::invalid_argument("--rounds must be positive");
  config.rounds = o.rounds;

  const std::vector<BenchRow> rows = run_bench(config);
  const bool json = o.format == "json";
  ordered_json doc = ordered_json::array();
  if (!json) {
    out << "n\tseconds\tns_per_symbol\twork\twork_per_symbol\tcopies\textension_attempts\tzero_pushes\tzero_pops"
           "\trebase_tokens\tzero_probes\n";
  }
  for (const BenchRow& r : rows) {
    const Counters& c = r.counters;
    if (json) {
      doc.push_back({{"n", r.n},
                     {"seconds", r.seconds},
                     {"ns_per_symbol", r.ns_per_symbol()},
                     {"work", c.work()},
                     {"work_per_symbol", r.work_per_symbol()},
                     {"copies", c.copies},
                     {"extension_attempts", c.extension_attempts},
                     {"zero_pushes", c.zero_pushes},
                     {"zero_pops", c.zero_pops},
                     {"rebase_tokens", c.rebase_tokens},
                     {"zero_probes", c.zero_probes}});
    } else {
      out << r.n << '\t' << r.seconds << '\t' << r.ns_per_symbol() << '\t' << c.work() << '\t' << r.work_per_symbol()
          << '\t' << c.copies << '\t' << c.extension_attempts << '\t' << c.zero_pushes << '\t' << c.zero_pops << '\t'
          << c.rebase_tokens << '\t' << c.zero_probes << '\n';
    }
  }
  if (json) {
    out << doc.dump() << '\n';
    return 0;
  }
  const auto report = [&](std::string_view what, const std::vector<std::size_t>& steps) {
    for (std::size_t k : steps) {
      out << "# nonlinear " << what << " between n=" << rows[k - 1].n << " and n=" << rows[k].n << '\n';
    }
  };
  if (config.definition == Definition::rev) {
    report("work", nonlinear_steps(rows, [](const BenchRow& r) { return r.work_per_symbol(); }));
  }
  report("time", nonlinear_steps(rows, [](const BenchRow& r) { return r.ns_per_symbol(); }));
  return 0;
}

}  // namespace

std::vector<Record> read_raw(std::istream& in) {
  Record r;
  for (char ch; in.get(ch);) {
    if (ch != '\n' && ch != '\r') r.tokens.push_back(static_cast<unsigned char>(ch));
  }
  return {r};
}

std::vector<Record> read_fasta(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  index_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '>') {
      const std::string header = trim(std::string_view(body).substr(1));
      const std::string id = header.substr(0, header.find_first_of(" \t"));
      if (id.empty()) throw InputError("FASTA header without id at line " + std::to_string(line_no));
      records.push_back(Record{id, {}});
      continue;
    }
    if (records.empty()) throw InputError("FASTA sequence data before the first header at line " + std::to_string(line_no));
    for (char ch : body) {
      if (ch != ' ' && ch != '\t') records.back().tokens.push_back(static_cast<unsigned char>(ch));
    }
  }
  if (records.empty()) throw InputError("no FASTA records in input");
  return records;
}

std::vector<Record> read_tokens(std::istream& in) {
  Record r;
  for (std::string word; in >> word;) r.tokens.push_back(parse_integer(word));
  return {r};
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_map_spec(std::string_view spec, InputFormat format) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::size_t pos = 0;
  while (pos <= spec.size() && !spec.empty()) {
    const auto comma = std::min(spec.find(',', pos), spec.size());
    const std::string item = trim(spec.substr(pos, comma - pos));
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("map entry '" + item + "' is not X:Y");
    const std::string x = item.substr(0, colon);
    const std::string y = item.substr(colon + 1);
    if (format == InputFormat::tokens) {
      pairs.emplace_back(parse_integer(x), parse_integer(y));
    } else {
      if (x.size() != 1 || y.size() != 1) throw std::invalid_argument("map entry '" + item + "' must pair two characters");
      pairs.emplace_back(static_cast<unsigned char>(x[0]), static_cast<unsigned char>(y[0]));
    }
    pos = comma + 1;
  }
  return pairs;
}

std::vector<std::int64_t> parse_static_spec(std::string_view spec, InputFormat format) {
  std::vector<std::int64_t> out;
  if (format != InputFormat::tokens) {
    for (char ch : spec) out.push_back(static_cast<unsigned char>(ch));
    return out;
  }
  std::string words(spec);
  std::replace(words.begin(), words.end(), ',', ' ');
  std::istringstream is(words);
  for (std::string w; is >> w;) out.push_back(parse_integer(w));
  return out;
}

Prepared prepare(const Record& record, ModelKind kind, InputFormat format, std::string_view map_spec,
                 std::string_view static_spec) {
  auto pairs = kind == ModelKind::theta ? parse_map_spec(map_spec, format)
                                        : std::vector<std::pair<std::int64_t, std::int64_t>>{};
  auto statics = kind == ModelKind::param ? parse_static_spec(static_spec, format) : std::vector<std::int64_t>{};

  Prepared p;
  p.id = record.id;
  if (format == InputFormat::tokens) {
    // Compress text, map and static symbols jointly so they keep referring to each other.
    std::vector<std::int64_t> all(record.tokens);
    for (const auto& [x, y] : pairs) {
      all.push_back(x);
      all.push_back(y);
    }
    all.insert(all.end(), statics.begin(), statics.end());
    const Text ranks = rank_compress(all);
    const auto sym = ranks.symbols();
    const auto n = record.tokens.size();
    p.text = Text(std::vector<symbol_t>(sym.begin(), sym.begin() + static_cast<std::ptrdiff_t>(n)));
    for (std::size_t k = 0; k < pairs.size(); ++k) pairs[k] = {sym[n + 2 * k], sym[n + 2 * k + 1]};
    for (std::size_t k = 0; k < statics.size(); ++k) statics[k] = sym[n + 2 * pairs.size() + k];
  } else {
    p.text = Text(to_symbols(record.tokens), AlphabetKind::byte);
  }

  p.model.kind = kind;
  if (kind == ModelKind::theta) {
    if (format != InputFormat::tokens && map_spec.empty()) {
      p.model.complement = ComplementMap::watson_crick();
    } else {
      p.model.complement = build_map(pairs, format == InputFormat::tokens ? p.text.alphabet_bound() : 256);
    }
  }
  if (kind == ModelKind::param) p.model.statics = StaticSymbols(to_symbols(statics));
  return p;
}

Engine default_engine() {
  return [](const Text& text, const Model& model, Definition definition, Direction direction) {
    return maximal_palindromes(text, model, definition, direction);
  };
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
        const Engine& engine) {
  Options o;
  CLI::App app{"Maximal generalized palindromes", "genpal"};
  app.require_subcommand(1);

  CLI::App* scan = app.add_subcommand("scan", "print the maximal palindrome of every center");
  add_model_options(*scan, o);
  scan->add_option("--input", o.input, "input file, - for stdin");
  scan->add_option("--format", o.format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));
  scan->add_flag("--fasta", o.fasta, "input is FASTA; one result per record");
  scan->add_flag("--tokens", o.tokens, "input is whitespace-separated integers");
  scan->add_option("--seed", o.seed, "unused by scan");

  CLI::App* verify = app.add_subcommand("verify", "compare the engine with the brute-force oracle on random strings");
  add_model_options(*verify, o);
  verify->add_option("--max-n", o.max_n, "longest generated string");
  verify->add_option("--cases", o.cases, "number of generated strings");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--alphabet", o.alphabet, "alphabet size (default: cycle through 1, 2, 4, 26)");

  CLI::App* bench = app.add_subcommand("bench", "time the engine on generated texts of doubling length");
  add_model_options(*bench, o);
  bench->add_option("--sizes", o.sizes, "log2 lengths A..B");
  bench->add_option("--gen", o.generator, "random|runs|unary|alternating|dna|perm");
  bench->add_option("--seed", o.seed, "random seed");
  bench->add_option("--alphabet", o.alphabet, "alphabet size of the random and runs generators");
  bench->add_option("--rounds", o.rounds, "interleaved passes over all sizes; each size keeps its fastest run");
  bench->add_option("--format", o.format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return 0;
    }
    err << "genpal: " << e.what() << '\n';
    return 2;
  }

  try {
    if (scan->parsed()) return cmd_scan(o, in, out, engine);
    if (verify->parsed()) return cmd_verify(o, out, engine);
    return cmd_bench(o, out);
  } catch (const std::exception& e) {
    err << "genpal: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace genpal::cli
