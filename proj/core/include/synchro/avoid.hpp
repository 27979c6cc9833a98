#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "synchro/dfa.hpp"
#include "synchro/rational.hpp"
#include "synchro/sync.hpp"

namespace synchro {

/// Shortest word w with state ∉ Q.w, if any.
struct AvoidanceRecord {
    State state = 0;
    std::optional<Word> word;

    std::optional<std::size_t> length() const {
        if (!word) return std::nullopt;
        return word->length();
    }

    friend bool operator==(const AvoidanceRecord&, const AvoidanceRecord&) = default;
};

/// k together with the number of states avoidable by words of length <= k.
struct Part2Failure {
    std::size_t k = 0;
    std::size_t count = 0;

    friend bool operator==(const Part2Failure&, const Part2Failure&) = default;
};

/// Outcome of checking the two avoidance clauses on one automaton:
///   part 1: every state is avoided by some word of length <= n;
///   part 2: for every k < n, at least k states are avoided by words of length <= k.
struct LemmaVerdict {
    bool part1_holds = true;
    std::vector<AvoidanceRecord> part1_violators;
    bool part2_holds = true;
    std::vector<Part2Failure> part2_failures;

    bool holds() const { return part1_holds && part2_holds; }

    friend bool operator==(const LemmaVerdict&, const LemmaVerdict&) = default;
};

/// BFS over images, stopping at the first image without q. Lexicographically
/// least among the shortest. Absent iff q lies in every reachable image.
AvoidanceRecord shortest_avoiding_word(const Dfa& dfa, State q, std::size_t max_states = kDefaultSubsetGuard);

/// One record per state, in state order, from a single traversal.
std::vector<AvoidanceRecord> avoidance_profile(const Dfa& dfa, std::size_t max_states = kDefaultSubsetGuard);

/// Evaluates both clauses on a precomputed profile of an n-state automaton.
LemmaVerdict evaluate_lemma3(const std::vector<AvoidanceRecord>& profile, std::size_t n);

/// Requires a strongly connected synchronizing automaton; throws
/// HypothesisError otherwise.
LemmaVerdict check_lemma3(const Dfa& dfa, std::size_t max_states = kDefaultSubsetGuard);

/// max over states of (avoiding length) / n. Throws HypothesisError on a
/// missing record or n < 2.
Rational max_avoidance_ratio(const std::vector<AvoidanceRecord>& profile, std::size_t n);

/// Requires a strongly connected synchronizing automaton with n >= 2.
Rational max_avoidance_ratio(const Dfa& dfa, std::size_t max_states = kDefaultSubsetGuard);

}  // namespace synchro
