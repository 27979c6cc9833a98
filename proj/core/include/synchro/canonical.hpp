#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "synchro/dfa.hpp"

namespace synchro {

/// Largest automata accepted by the brute-force isomorphism routines.
inline constexpr std::size_t kCanonicalMaxStates = 8;
inline constexpr std::size_t kCanonicalMaxLetters = 3;

/// Joint renaming of states and letters: state q becomes states[q], letter l
/// becomes letters[l].
struct Relabeling {
    std::vector<State> states;
    std::vector<Letter> letters;

    friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

/// The automaton with delta'(pi(q), sigma(l)) = pi(delta(q, l)).
Dfa relabel(const Dfa& dfa, const Relabeling& relabeling);

struct CanonicalForm {
    Dfa automaton;
    /// Maps the input onto `automaton`.
    Relabeling relabeling;
};

/// Lexicographically least row-major transition table over all n! * k! joint
/// state/letter permutations. Throws GuardExceeded outside the size limits.
Dfa canonical_form(const Dfa& dfa);
CanonicalForm canonical_form_with_relabeling(const Dfa& dfa);

/// Equivalent to canonical_form(dfa) == dfa, with early exit.
bool is_canonical(const Dfa& dfa);

/// A relabeling mapping `from` onto `to`, if the two are isomorphic.
std::optional<Relabeling> find_isomorphism(const Dfa& from, const Dfa& to);

}  // namespace synchro
