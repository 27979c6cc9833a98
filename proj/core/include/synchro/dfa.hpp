#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synchro {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Subset of the states [0, universe) of an automaton, stored as a bit mask.
///
/// Universes are limited to kMaxUniverse states. Iteration is always in
/// ascending state order.
class StateSet {
public:
    static constexpr std::size_t kMaxUniverse = 64;

    explicit StateSet(std::size_t universe);
    StateSet(std::size_t universe, std::initializer_list<State> members);

    static StateSet full(std::size_t universe);
    static StateSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const noexcept { return universe_; }
    std::uint64_t mask() const noexcept { return mask_; }

    bool contains(State q) const noexcept { return q < universe_ && ((mask_ >> q) & 1U) != 0; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool empty() const noexcept { return mask_ == 0; }
    bool is_subset_of(const StateSet& other) const;

    void insert(State q);
    void erase(State q);

    std::vector<State> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
            fn(static_cast<State>(std::countr_zero(rest)));
        }
    }

    friend bool operator==(const StateSet&, const StateSet&) = default;

private:
    std::size_t universe_;
    std::uint64_t mask_ = 0;
};

/// Finite sequence of letter indices. Letters are range-checked only when the
/// word is applied to an automaton.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::span<const Letter> letters() const noexcept { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    void push_back(Letter l) { letters_.push_back(l); }

    friend Word operator+(const Word& u, const Word& v);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Complete deterministic automaton over states [0, n) and letters [0, k).
///
/// The transition table is stored row-major: entry (q, l) at index q * k + l.
/// Display names are presentation only and do not take part in equality.
class Dfa {
public:
    /// Throws InvalidArgument unless n >= 1, k >= 1, table.size() == n * k and
    /// every entry is in [0, n).
    Dfa(std::size_t states, std::size_t letters, std::vector<State> table);

    /// One row per state, one entry per letter.
    static Dfa from_rows(const std::vector<std::vector<State>>& rows);

    std::size_t num_states() const noexcept { return n_; }
    std::size_t num_letters() const noexcept { return k_; }

    State next(State q, Letter l) const { return table_[q * k_ + l]; }
    std::span<const State> table() const noexcept { return table_; }
    std::span<const State> row(State q) const { return std::span<const State>(table_).subspan(q * k_, k_); }

    std::string state_name(State q) const;
    std::string letter_name(Letter l) const;

    /// Copy with explicit display names; an empty vector keeps the defaults.
    Dfa with_names(std::vector<std::string> state_names, std::vector<std::string> letter_names) const;

    friend bool operator==(const Dfa& a, const Dfa& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.table_ == b.table_;
    }

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<State> table_;
    std::vector<std::string> state_names_;
    std::vector<std::string> letter_names_;
};

/// Default names: `q0`..`q{n-1}`; letters `a`..`z` when k <= 26, else `l0`, `l1`, ...
std::string default_state_name(State q);
std::string default_letter_name(Letter l, std::size_t alphabet_size);

/// Image { delta(q, l) : q in s }.
StateSet apply_letter(const Dfa& dfa, const StateSet& s, Letter l);
/// Left fold of apply_letter over w; the empty word is the identity.
StateSet apply_word(const Dfa& dfa, const StateSet& s, const Word& w);
/// q . w for a single state.
State apply_word(const Dfa& dfa, State q, const Word& w);

/// True iff every state reaches every other state in the transition digraph.
bool is_strongly_connected(const Dfa& dfa);

/// Renders a word with the automaton's letter names. Single-character names
/// are concatenated (`abba`); otherwise names are space separated.
std::string format_word(const Dfa& dfa, const Word& w);
/// Inverse of format_word. Throws InvalidArgument on unknown letters.
Word parse_word(const Dfa& dfa, std::string_view text);

/// "{q0,q2}" using the automaton's state names.
std::string format_state_set(const Dfa& dfa, const StateSet& s);
/// Accepts a state name (`q3`) or a bare index (`3`).
State parse_state(const Dfa& dfa, std::string_view text);

}  // namespace synchro
