#include "synchro/sync.hpp"

#include <bit>
#include <string>
#include <vector>

#include "image_bfs.hpp"
#include "synchro/error.hpp"

namespace synchro {

bool is_synchronizing(const Dfa& dfa) {
    const std::size_t n = dfa.num_states();
    const std::size_t k = dfa.num_letters();
    if (n == 1) return true;

    // preimage[l][q] = states p with p.l = q
    std::vector<std::vector<std::vector<State>>> preimage(k, std::vector<std::vector<State>>(n));
    for (State p = 0; p < n; ++p) {
        for (Letter l = 0; l < k; ++l) preimage[l][dfa.next(p, l)].push_back(p);
    }

    // Backward BFS on unordered pairs from the diagonal.
    auto index = [n](State p, State q) { return p < q ? p * n + q : q * n + p; };
    std::vector<bool> mergeable(n * n, false);
    std::vector<std::pair<State, State>> queue;
    queue.reserve(n * (n + 1) / 2);
    for (State q = 0; q < n; ++q) {
        mergeable[index(q, q)] = true;
        queue.emplace_back(q, q);
    }
    std::size_t merged_pairs = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [x, y] = queue[head];
        for (Letter l = 0; l < k; ++l) {
            for (State p : preimage[l][x]) {
                for (State q : preimage[l][y]) {
                    if (p == q) continue;
                    const std::size_t i = index(p, q);
                    if (mergeable[i]) continue;
                    mergeable[i] = true;
                    ++merged_pairs;
                    queue.emplace_back(p, q);
                }
            }
        }
    }
    return merged_pairs == n * (n - 1) / 2;
}

SyncResult shortest_sync_word(const Dfa& dfa, std::size_t max_states) {
    detail::ImageBfs bfs(dfa, max_states);
    std::optional<std::uint64_t> singleton;
    bfs.run([&](std::uint64_t mask) {
        if (std::has_single_bit(mask)) {
            singleton = mask;
            return true;
        }
        return false;
    });
    SyncResult result;
    if (!singleton) return result;
    result.synchronizing = true;
    result.shortest_word = bfs.word_to(*singleton);
    result.final_state = static_cast<State>(std::countr_zero(*singleton));
    return result;
}

BoundsTable bounds(std::uint64_t n) {
    if (n == 0 || n > 1'000'000) throw InvalidArgument("bounds are defined for 1 <= n <= 10^6, got " + std::to_string(n));
    BoundsTable table;
    table.n = n;
    table.cerny = (n - 1) * (n - 1);
    table.pin_frankl = (n * n * n - n) / 6;
    const auto m = static_cast<std::int64_t>(n);
    const std::int64_t numerator = m * (7 * m * m + 6 * m - 16);
    table.trahtman_claimed = Rational(numerator, 48);
    return table;
}

}  // namespace synchro
