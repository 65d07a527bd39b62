// SPDX-License-Identifier: Apache-2.0

#ifndef GENPAL_CLI_HPP
#define GENPAL_CLI_HPP

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genpal/core.hpp"
#include "genpal/model.hpp"

namespace genpal::cli {

/// Unreadable or malformed input. Maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class InputFormat { raw, fasta, tokens };

struct Record {
  std::string id;  // empty unless read from FASTA
  std::vector<std::int64_t> tokens;
};

/// Raw input: every byte except line breaks is a symbol.
std::vector<Record> read_raw(std::istream& in);
/// One record per '>' header; the id is the header up to the first blank.
std::vector<Record> read_fasta(std::istream& in);
/// Whitespace-separated integers.
std::vector<Record> read_tokens(std::istream& in);

/// "X:Y,..." installs X<->Y for every pair; unlisted symbols are fixed. On byte
/// input each side is one character, on token input an integer.
std::vector<std::pair<std::int64_t, std::int64_t>> parse_map_spec(std::string_view spec, InputFormat format);
/// On byte input every character is a symbol, on token input a comma- or
/// blank-separated integer list.
std::vector<std::int64_t> parse_static_spec(std::string_view spec, InputFormat format);

/// A scannable record: text plus the model instantiated on its alphabet. Token
/// input is rank-compressed together with the map and static symbols.
struct Prepared {
  std::string id;
  Text text;
  Model model;
};

Prepared prepare(const Record& record, ModelKind kind, InputFormat format, std::string_view map_spec,
                 std::string_view static_spec);

using Engine = std::function<CenterArray(const Text&, const Model&, Definition, Direction)>;

/// The default engine: genpal::maximal_palindromes.
Engine default_engine();

/// Runs `genpal scan|verify|bench ...`. Returns 0 on success, 1 when
/// verification finds a mismatch, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
        const Engine& engine = default_engine());

}  // namespace genpal::cli

#endif  // GENPAL_CLI_HPP
