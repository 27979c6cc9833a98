#include "synchro/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "synchro/error.hpp"

namespace synchro {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::uint64_t parse_number(const Token& token, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(std::string(what) + " '" + std::string(token.text) + "' is too large", line, token.column);
    }
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(std::string(what) + " '" + std::string(token.text) + "' is not a non-negative integer",
                         line, token.column);
    }
    return value;
}

bool is_skippable(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 32;

bool is_dot_identifier(const std::string& name) {
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

std::string dot_id(const std::string& name) {
    if (is_dot_identifier(name)) return name;
    std::string quoted = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
    std::size_t n = 0;
    std::size_t k = 0;
    bool have_header = false;
    std::vector<State> table;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (is_skippable(line)) {
            if (end == text.size()) break;
            continue;
        }
        const std::vector<Token> tokens = split_tokens(line);
        if (!have_header) {
            if (tokens.size() != 2) {
                throw ParseError("malformed header: expected 'n k', found " + std::to_string(tokens.size()) +
                                     " field(s)",
                                 line_no, tokens.empty() ? 1 : tokens.front().column);
            }
            const std::uint64_t states = parse_number(tokens[0], line_no, "state count");
            const std::uint64_t letters = parse_number(tokens[1], line_no, "alphabet size");
            if (states == 0) throw ParseError("malformed header: state count must be at least 1", line_no, tokens[0].column);
            if (letters == 0) throw ParseError("malformed header: alphabet size must be at least 1", line_no, tokens[1].column);
            if (states > kMaxTableEntries / letters) {
                throw ParseError("malformed header: transition table too large", line_no, tokens[0].column);
            }
            n = static_cast<std::size_t>(states);
            k = static_cast<std::size_t>(letters);
            table.reserve(n * k);
            have_header = true;
        } else {
            if (rows == n) {
                throw ParseError("unexpected content after the transition table", line_no, tokens.front().column);
            }
            if (tokens.size() != k) {
                throw ParseError("wrong entry count: expected " + std::to_string(k) + " entries for state " +
                                     std::to_string(rows) + ", found " + std::to_string(tokens.size()),
                                 line_no, tokens.size() > k ? tokens[k].column : line.size() + 1);
            }
            for (const Token& token : tokens) {
                const std::uint64_t target = parse_number(token, line_no, "entry");
                if (target >= n) {
                    throw ParseError("entry out of range: " + std::to_string(target) + " is not a state of an " +
                                         std::to_string(n) + "-state automaton",
                                     line_no, token.column);
                }
                table.push_back(static_cast<State>(target));
            }
            ++rows;
        }
        if (end == text.size()) break;
    }

    if (!have_header) throw ParseError("malformed header: missing 'n k' line", line_no, 1);
    if (rows != n) {
        throw ParseError("wrong entry count: expected " + std::to_string(n) + " rows, found " + std::to_string(rows),
                         line_no, 1);
    }
    return Dfa(n, k, std::move(table));
}

std::string serialize_dfa(const Dfa& dfa) {
    std::string out = std::to_string(dfa.num_states()) + " " + std::to_string(dfa.num_letters()) + "\n";
    for (State q = 0; q < dfa.num_states(); ++q) {
        const auto row = dfa.row(q);
        for (std::size_t l = 0; l < row.size(); ++l) {
            if (l > 0) out += ' ';
            out += std::to_string(row[l]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json dfa_to_json(const Dfa& dfa) {
    nlohmann::json delta = nlohmann::json::array();
    for (State q = 0; q < dfa.num_states(); ++q) {
        const auto row = dfa.row(q);
        delta.push_back(std::vector<State>(row.begin(), row.end()));
    }
    return nlohmann::json{{"n", dfa.num_states()}, {"k", dfa.num_letters()}, {"delta", std::move(delta)}};
}

Dfa dfa_from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& message) -> Dfa { throw ParseError("invalid automaton JSON: " + message, 0, 0); };
    if (!j.is_object()) return fail("expected an object");
    for (const char* key : {"n", "k", "delta"}) {
        if (!j.contains(key)) return fail(std::string("missing key '") + key + "'");
    }
    if (!j["n"].is_number_unsigned() || !j["k"].is_number_unsigned()) return fail("'n' and 'k' must be non-negative integers");
    const auto n = j["n"].get<std::uint64_t>();
    const auto k = j["k"].get<std::uint64_t>();
    if (n == 0 || k == 0) return fail("'n' and 'k' must be at least 1");
    const auto& delta = j["delta"];
    if (!delta.is_array() || delta.size() != n) return fail("'delta' must hold exactly n rows");
    std::vector<State> table;
    table.reserve(n * k);
    for (std::size_t q = 0; q < delta.size(); ++q) {
        const auto& row = delta[q];
        if (!row.is_array() || row.size() != k) {
            return fail("wrong entry count: row " + std::to_string(q) + " must hold exactly k entries");
        }
        for (const auto& entry : row) {
            if (!entry.is_number_unsigned()) return fail("entries must be non-negative integers");
            const auto target = entry.get<std::uint64_t>();
            if (target >= n) return fail("entry out of range: " + std::to_string(target) + " in row " + std::to_string(q));
            table.push_back(static_cast<State>(target));
        }
    }
    return Dfa(n, k, std::move(table));
}

Dfa read_dfa(std::string_view text) {
    // Comment lines can precede a text automaton, so skip them before sniffing.
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else if (c == '#') {
            const std::size_t eol = text.find('\n', pos);
            pos = eol == std::string_view::npos ? text.size() : eol + 1;
        } else {
            break;
        }
    }
    if (pos < text.size() && text[pos] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text.substr(pos));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), 0, 0);
        }
        return dfa_from_json(j);
    }
    return parse_dfa(text);
}

std::string to_dot(const Dfa& dfa) {
    std::ostringstream out;
    out << "digraph dfa {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (State q = 0; q < dfa.num_states(); ++q) out << "  " << dot_id(dfa.state_name(q)) << ";\n";
    for (State q = 0; q < dfa.num_states(); ++q) {
        // Targets in order of their first letter, labels joined by commas.
        std::vector<State> order;
        std::map<State, std::string> labels;
        for (Letter l = 0; l < dfa.num_letters(); ++l) {
            const State target = dfa.next(q, l);
            auto [it, inserted] = labels.try_emplace(target, dfa.letter_name(l));
            if (inserted) {
                order.push_back(target);
            } else {
                it->second += "," + dfa.letter_name(l);
            }
        }
        for (State target : order) {
            out << "  " << dot_id(dfa.state_name(q)) << " -> " << dot_id(dfa.state_name(target)) << " [label=\""
                << labels[target] << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace synchro
