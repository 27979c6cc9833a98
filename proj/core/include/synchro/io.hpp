#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "synchro/dfa.hpp"

namespace synchro {

/// Parses the plain-text automaton format:
///
///     # optional comment lines
///     n k
///     delta[0][0] ... delta[0][k-1]
///     ...
///     delta[n-1][0] ... delta[n-1][k-1]
///
/// Blank lines are ignored. Throws ParseError with line/column on bad input.
Dfa parse_dfa(std::string_view text);

/// Inverse of parse_dfa; always ends with a newline.
std::string serialize_dfa(const Dfa& dfa);

/// {"n": int, "k": int, "delta": [[int]]}
nlohmann::json dfa_to_json(const Dfa& dfa);
Dfa dfa_from_json(const nlohmann::json& j);

/// Accepts either the JSON object or the text format, chosen by the first
/// non-blank character.
Dfa read_dfa(std::string_view text);

/// Graphviz digraph, one edge per (state, letter). Parallel edges between the
/// same pair of states are merged into one edge with comma-joined labels.
std::string to_dot(const Dfa& dfa);

}  // namespace synchro
