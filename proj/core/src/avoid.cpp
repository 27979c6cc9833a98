#include "synchro/avoid.hpp"

#include <algorithm>
#include <string>

#include "image_bfs.hpp"
#include "synchro/error.hpp"

namespace synchro {

namespace {

void require_lemma_hypotheses(const Dfa& dfa) {
    if (!is_strongly_connected(dfa)) throw HypothesisError("automaton is not strongly connected");
    if (!is_synchronizing(dfa)) throw HypothesisError("automaton is not synchronizing");
}

}  // namespace

AvoidanceRecord shortest_avoiding_word(const Dfa& dfa, State q, std::size_t max_states) {
    if (q >= dfa.num_states()) {
        throw InvalidArgument("state " + std::to_string(q) + " out of range for " +
                              std::to_string(dfa.num_states()) + "-state automaton");
    }
    detail::ImageBfs bfs(dfa, max_states);
    const std::uint64_t bit = std::uint64_t{1} << q;
    std::optional<std::uint64_t> found;
    bfs.run([&](std::uint64_t mask) {
        if ((mask & bit) == 0) {
            found = mask;
            return true;
        }
        return false;
    });
    AvoidanceRecord record{q, std::nullopt};
    if (found) record.word = bfs.word_to(*found);
    return record;
}

std::vector<AvoidanceRecord> avoidance_profile(const Dfa& dfa, std::size_t max_states) {
    const std::size_t n = dfa.num_states();
    detail::ImageBfs bfs(dfa, max_states);
    std::vector<AvoidanceRecord> profile(n);
    std::vector<std::optional<std::uint64_t>> first_image(n);
    const std::uint64_t all = bfs.full_mask();
    std::uint64_t pending = all;
    bfs.run([&](std::uint64_t mask) {
        // States newly missing from this image get it as their witness.
        for (std::uint64_t fresh = pending & ~mask; fresh != 0; fresh &= fresh - 1) {
            first_image[std::countr_zero(fresh)] = mask;
        }
        pending &= mask;
        return pending == 0;
    });
    for (State q = 0; q < n; ++q) {
        profile[q].state = q;
        if (first_image[q]) profile[q].word = bfs.word_to(*first_image[q]);
    }
    return profile;
}

LemmaVerdict evaluate_lemma3(const std::vector<AvoidanceRecord>& profile, std::size_t n) {
    LemmaVerdict verdict;
    for (const AvoidanceRecord& record : profile) {
        const auto length = record.length();
        if (!length || *length > n) verdict.part1_violators.push_back(record);
    }
    verdict.part1_holds = verdict.part1_violators.empty();

    std::vector<std::size_t> lengths;
    for (const AvoidanceRecord& record : profile) {
        if (auto length = record.length()) lengths.push_back(*length);
    }
    std::sort(lengths.begin(), lengths.end());
    for (std::size_t k = 1; k < n; ++k) {
        const auto count = static_cast<std::size_t>(std::upper_bound(lengths.begin(), lengths.end(), k) - lengths.begin());
        if (count < k) verdict.part2_failures.push_back({k, count});
    }
    verdict.part2_holds = verdict.part2_failures.empty();
    return verdict;
}

LemmaVerdict check_lemma3(const Dfa& dfa, std::size_t max_states) {
    require_lemma_hypotheses(dfa);
    return evaluate_lemma3(avoidance_profile(dfa, max_states), dfa.num_states());
}

Rational max_avoidance_ratio(const std::vector<AvoidanceRecord>& profile, std::size_t n) {
    if (n < 2) throw HypothesisError("avoidance ratio needs at least 2 states");
    std::size_t longest = 0;
    for (const AvoidanceRecord& record : profile) {
        const auto length = record.length();
        if (!length) throw HypothesisError("state " + std::to_string(record.state) + " has no avoiding word");
        longest = std::max(longest, *length);
    }
    return Rational(static_cast<std::int64_t>(longest), static_cast<std::int64_t>(n));
}

Rational max_avoidance_ratio(const Dfa& dfa, std::size_t max_states) {
    require_lemma_hypotheses(dfa);
    return max_avoidance_ratio(avoidance_profile(dfa, max_states), dfa.num_states());
}

}  // namespace synchro
