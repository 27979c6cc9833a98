#include "synchro/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "synchro/error.hpp"

namespace synchro {

namespace {

void check_guard(const Dfa& dfa) {
    if (dfa.num_states() > kCanonicalMaxStates || dfa.num_letters() > kCanonicalMaxLetters) {
        throw GuardExceeded("canonical form is limited to " + std::to_string(kCanonicalMaxStates) + " states and " +
                            std::to_string(kCanonicalMaxLetters) + " letters, got " +
                            std::to_string(dfa.num_states()) + " and " + std::to_string(dfa.num_letters()));
    }
}

template <typename T>
std::vector<T> identity(std::size_t size) {
    std::vector<T> v(size);
    std::iota(v.begin(), v.end(), T{0});
    return v;
}

template <typename T>
std::vector<T> inverse(const std::vector<T>& perm) {
    std::vector<T> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<T>(i);
    return inv;
}

// Walks every joint permutation and keeps the least relabeled table. Entries
// are generated in row-major order of the relabeled table so a candidate is
// abandoned at the first entry exceeding the incumbent. With stop_on_smaller,
// returns as soon as any candidate beats the starting table.
struct Minimizer {
    const Dfa& dfa;
    std::vector<State> best;
    Relabeling best_relabeling;
    bool improved = false;

    explicit Minimizer(const Dfa& d)
        : dfa(d),
          best(d.table().begin(), d.table().end()),
          best_relabeling{identity<State>(d.num_states()), identity<Letter>(d.num_letters())} {}

    void run(bool stop_on_smaller) {
        const std::size_t n = dfa.num_states();
        const std::size_t k = dfa.num_letters();
        std::vector<State> states = identity<State>(n);
        std::vector<State> candidate(n * k);
        do {
            const std::vector<State> state_inv = inverse(states);
            std::vector<Letter> letters = identity<Letter>(k);
            do {
                const std::vector<Letter> letter_inv = inverse(letters);
                // -1: candidate smaller so far, 0: equal prefix, 1: abandoned
                int order = 0;
                for (std::size_t i = 0; i < n * k; ++i) {
                    const State source = state_inv[i / k];
                    const Letter letter = letter_inv[i % k];
                    const State entry = states[dfa.next(source, letter)];
                    candidate[i] = entry;
                    if (order == 0) {
                        if (entry > best[i]) {
                            order = 1;
                            break;
                        }
                        if (entry < best[i]) order = -1;
                    }
                }
                if (order < 0) {
                    best = candidate;
                    best_relabeling = Relabeling{states, letters};
                    improved = true;
                    if (stop_on_smaller) return;
                }
            } while (std::next_permutation(letters.begin(), letters.end()));
        } while (std::next_permutation(states.begin(), states.end()));
    }
};

}  // namespace

Dfa relabel(const Dfa& dfa, const Relabeling& relabeling) {
    const std::size_t n = dfa.num_states();
    const std::size_t k = dfa.num_letters();
    auto is_permutation_of = [](auto perm, std::size_t size) {
        if (perm.size() != size) return false;
        std::sort(perm.begin(), perm.end());
        for (std::size_t i = 0; i < size; ++i) {
            if (perm[i] != i) return false;
        }
        return true;
    };
    if (!is_permutation_of(relabeling.states, n) || !is_permutation_of(relabeling.letters, k)) {
        throw InvalidArgument("relabeling is not a pair of permutations matching the automaton");
    }
    std::vector<State> table(n * k);
    for (State q = 0; q < n; ++q) {
        for (Letter l = 0; l < k; ++l) {
            table[relabeling.states[q] * k + relabeling.letters[l]] = relabeling.states[dfa.next(q, l)];
        }
    }
    return Dfa(n, k, std::move(table));
}

CanonicalForm canonical_form_with_relabeling(const Dfa& dfa) {
    check_guard(dfa);
    Minimizer m(dfa);
    m.run(false);
    return CanonicalForm{Dfa(dfa.num_states(), dfa.num_letters(), std::move(m.best)), std::move(m.best_relabeling)};
}

Dfa canonical_form(const Dfa& dfa) { return canonical_form_with_relabeling(dfa).automaton; }

bool is_canonical(const Dfa& dfa) {
    check_guard(dfa);
    Minimizer m(dfa);
    m.run(true);
    return !m.improved;
}

std::optional<Relabeling> find_isomorphism(const Dfa& from, const Dfa& to) {
    check_guard(from);
    check_guard(to);
    if (from.num_states() != to.num_states() || from.num_letters() != to.num_letters()) return std::nullopt;
    // Both canonical forms coincide iff isomorphic; compose the two relabelings.
    const CanonicalForm a = canonical_form_with_relabeling(from);
    const CanonicalForm b = canonical_form_with_relabeling(to);
    if (!(a.automaton == b.automaton)) return std::nullopt;
    const std::vector<State> b_states_inv = inverse(b.relabeling.states);
    const std::vector<Letter> b_letters_inv = inverse(b.relabeling.letters);
    Relabeling result;
    for (State s : a.relabeling.states) result.states.push_back(b_states_inv[s]);
    for (Letter l : a.relabeling.letters) result.letters.push_back(b_letters_inv[l]);
    return result;
}

}  // namespace synchro
