#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "synchro/dfa.hpp"
#include "synchro/rational.hpp"

namespace synchro {

/// Default size limit for the exhaustive subset searches (2^n images).
inline constexpr std::size_t kDefaultSubsetGuard = 24;

struct SyncResult {
    bool synchronizing = false;
    std::optional<Word> shortest_word;
    std::optional<State> final_state;

    std::optional<std::size_t> length() const {
        if (!shortest_word) return std::nullopt;
        return shortest_word->length();
    }
};

/// Pair-graph criterion: every pair of states can be merged. O(n^2 k), no size limit.
bool is_synchronizing(const Dfa& dfa);

/// Shortest synchronizing word by BFS over the images of Q. Among the shortest
/// words the lexicographically least (by letter index) is returned.
/// Throws GuardExceeded when n > max_states.
SyncResult shortest_sync_word(const Dfa& dfa, std::size_t max_states = kDefaultSubsetGuard);

/// Reset-word length bounds for n states.
struct BoundsTable {
    std::uint64_t n = 0;
    /// (n-1)^2, conjectured.
    std::uint64_t cerny = 0;
    /// (n^3-n)/6, proven.
    std::uint64_t pin_frankl = 0;
    /// n(7n^2+6n-16)/48, claimed without a valid proof. Exact, possibly non-integral.
    Rational trahtman_claimed;
};

/// Exact evaluation; n must be in [1, 10^6].
BoundsTable bounds(std::uint64_t n);

}  // namespace synchro
