#include "synchro/dfa.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "synchro/error.hpp"

namespace synchro {

namespace {

void check_universe(std::size_t universe) {
    if (universe > StateSet::kMaxUniverse) {
        throw GuardExceeded("state sets support at most " + std::to_string(StateSet::kMaxUniverse) +
                            " states, got " + std::to_string(universe));
    }
}

std::uint64_t full_mask(std::size_t universe) {
    return universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
}

void check_letter(const Dfa& dfa, Letter l) {
    if (l >= dfa.num_letters()) {
        throw InvalidArgument("letter index " + std::to_string(l) + " out of range for alphabet of size " +
                              std::to_string(dfa.num_letters()));
    }
}

bool reaches_all(const std::vector<std::vector<State>>& adjacency) {
    std::vector<bool> seen(adjacency.size(), false);
    std::vector<State> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const State v = stack.back();
        stack.pop_back();
        for (State w : adjacency[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == adjacency.size();
}

}  // namespace

// StateSet

StateSet::StateSet(std::size_t universe) : universe_(universe) { check_universe(universe); }

StateSet::StateSet(std::size_t universe, std::initializer_list<State> members) : StateSet(universe) {
    for (State q : members) insert(q);
}

StateSet StateSet::full(std::size_t universe) {
    StateSet s(universe);
    s.mask_ = full_mask(universe);
    return s;
}

StateSet StateSet::from_mask(std::size_t universe, std::uint64_t mask) {
    StateSet s(universe);
    if ((mask & ~full_mask(universe)) != 0) {
        throw InvalidArgument("mask has members outside universe of size " + std::to_string(universe));
    }
    s.mask_ = mask;
    return s;
}

bool StateSet::is_subset_of(const StateSet& other) const {
    if (universe_ != other.universe_) throw InvalidArgument("state set universe mismatch");
    return (mask_ & ~other.mask_) == 0;
}

void StateSet::insert(State q) {
    if (q >= universe_) {
        throw InvalidArgument("state " + std::to_string(q) + " outside universe of size " + std::to_string(universe_));
    }
    mask_ |= std::uint64_t{1} << q;
}

void StateSet::erase(State q) {
    if (q < universe_) mask_ &= ~(std::uint64_t{1} << q);
}

std::vector<State> StateSet::members() const {
    std::vector<State> out;
    out.reserve(size());
    for_each([&](State q) { out.push_back(q); });
    return out;
}

// Word

Word operator+(const Word& u, const Word& v) {
    std::vector<Letter> letters(u.letters_);
    letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
    return Word(std::move(letters));
}

// Dfa

Dfa::Dfa(std::size_t states, std::size_t letters, std::vector<State> table)
    : n_(states), k_(letters), table_(std::move(table)) {
    if (n_ == 0) throw InvalidArgument("automaton needs at least one state");
    if (k_ == 0) throw InvalidArgument("automaton needs at least one letter");
    if (table_.size() != n_ * k_) {
        throw InvalidArgument("transition table has " + std::to_string(table_.size()) + " entries, expected " +
                              std::to_string(n_ * k_));
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (table_[i] >= n_) {
            throw InvalidArgument("transition (" + std::to_string(i / k_) + ", " + std::to_string(i % k_) +
                                  ") targets state " + std::to_string(table_[i]) + " outside [0, " +
                                  std::to_string(n_) + ")");
        }
    }
}

Dfa Dfa::from_rows(const std::vector<std::vector<State>>& rows) {
    if (rows.empty()) throw InvalidArgument("automaton needs at least one state");
    const std::size_t k = rows.front().size();
    std::vector<State> table;
    table.reserve(rows.size() * k);
    for (const auto& row : rows) {
        if (row.size() != k) throw InvalidArgument("rows of the transition table have different lengths");
        table.insert(table.end(), row.begin(), row.end());
    }
    return Dfa(rows.size(), k, std::move(table));
}

std::string Dfa::state_name(State q) const {
    return q < state_names_.size() ? state_names_[q] : default_state_name(q);
}

std::string Dfa::letter_name(Letter l) const {
    return l < letter_names_.size() ? letter_names_[l] : default_letter_name(l, k_);
}

Dfa Dfa::with_names(std::vector<std::string> state_names, std::vector<std::string> letter_names) const {
    if (!state_names.empty() && state_names.size() != n_) throw InvalidArgument("need one name per state");
    if (!letter_names.empty() && letter_names.size() != k_) throw InvalidArgument("need one name per letter");
    Dfa copy = *this;
    copy.state_names_ = std::move(state_names);
    copy.letter_names_ = std::move(letter_names);
    return copy;
}

std::string default_state_name(State q) { return "q" + std::to_string(q); }

std::string default_letter_name(Letter l, std::size_t alphabet_size) {
    if (alphabet_size <= 26) return std::string(1, static_cast<char>('a' + l));
    return "l" + std::to_string(l);
}

// Action of words

StateSet apply_letter(const Dfa& dfa, const StateSet& s, Letter l) {
    if (s.universe() != dfa.num_states()) {
        throw InvalidArgument("state set universe " + std::to_string(s.universe()) +
                              " does not match automaton with " + std::to_string(dfa.num_states()) + " states");
    }
    check_letter(dfa, l);
    StateSet image(s.universe());
    s.for_each([&](State q) { image.insert(dfa.next(q, l)); });
    return image;
}

StateSet apply_word(const Dfa& dfa, const StateSet& s, const Word& w) {
    StateSet current = s;
    if (s.universe() != dfa.num_states()) {
        throw InvalidArgument("state set universe " + std::to_string(s.universe()) +
                              " does not match automaton with " + std::to_string(dfa.num_states()) + " states");
    }
    for (Letter l : w.letters()) current = apply_letter(dfa, current, l);
    return current;
}

State apply_word(const Dfa& dfa, State q, const Word& w) {
    if (q >= dfa.num_states()) throw InvalidArgument("state " + std::to_string(q) + " out of range");
    for (Letter l : w.letters()) {
        check_letter(dfa, l);
        q = dfa.next(q, l);
    }
    return q;
}

bool is_strongly_connected(const Dfa& dfa) {
    const std::size_t n = dfa.num_states();
    std::vector<std::vector<State>> forward(n), backward(n);
    for (State q = 0; q < n; ++q) {
        for (State target : dfa.row(q)) {
            forward[q].push_back(target);
            backward[target].push_back(q);
        }
    }
    return reaches_all(forward) && reaches_all(backward);
}

// Formatting

namespace {

bool single_char_letters(const Dfa& dfa) {
    for (Letter l = 0; l < dfa.num_letters(); ++l) {
        if (dfa.letter_name(l).size() != 1) return false;
    }
    return true;
}

}  // namespace

std::string format_word(const Dfa& dfa, const Word& w) {
    const bool compact = single_char_letters(dfa);
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        check_letter(dfa, w[i]);
        if (!compact && i > 0) out += ' ';
        out += dfa.letter_name(w[i]);
    }
    return out;
}

Word parse_word(const Dfa& dfa, std::string_view text) {
    auto lookup = [&](std::string_view name) -> Letter {
        for (Letter l = 0; l < dfa.num_letters(); ++l) {
            if (dfa.letter_name(l) == name) return l;
        }
        throw InvalidArgument("unknown letter '" + std::string(name) + "'");
    };
    Word w;
    if (single_char_letters(dfa)) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            w.push_back(lookup(std::string_view(&c, 1)));
        }
        return w;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) w.push_back(lookup(text.substr(i, j - i)));
        i = j;
    }
    return w;
}

std::string format_state_set(const Dfa& dfa, const StateSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](State q) {
        if (!first) out += ',';
        out += dfa.state_name(q);
        first = false;
    });
    return out + "}";
}

State parse_state(const Dfa& dfa, std::string_view text) {
    for (State q = 0; q < dfa.num_states(); ++q) {
        if (dfa.state_name(q) == text) return q;
    }
    State index = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
    if (ec == std::errc{} && ptr == text.data() + text.size() && !text.empty() && index < dfa.num_states()) {
        return index;
    }
    throw InvalidArgument("unknown state '" + std::string(text) + "'");
}

}  // namespace synchro
