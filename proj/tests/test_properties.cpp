#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "synchro/synchro.hpp"

using namespace synchro;

namespace {

constexpr int kCases = 1000;

struct Gen {
    std::mt19937 rng;

    explicit Gen(unsigned seed) : rng(seed) {}

    std::size_t size(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }

    Dfa dfa(std::size_t max_n, std::size_t max_k) {
        return fixtures::from_table(oracle::random_table(rng, size(1, max_n), size(1, max_k)));
    }

    Word word(const Dfa& d, std::size_t max_length) {
        std::vector<Letter> letters(size(0, max_length));
        for (auto& l : letters) l = static_cast<Letter>(size(0, d.num_letters() - 1));
        return Word(std::move(letters));
    }

    StateSet subset(const Dfa& d) {
        const std::uint64_t full = (std::uint64_t{1} << d.num_states()) - 1;
        return StateSet::from_mask(d.num_states(), std::uniform_int_distribution<std::uint64_t>(0, full)(rng));
    }

    // Strongly connected synchronizing automaton with 2 <= n <= max_n.
    Dfa sync_strongly_connected(std::size_t max_n, std::size_t max_k) {
        while (true) {
            const Dfa d = fixtures::from_table(oracle::random_table(rng, size(2, max_n), size(1, max_k)));
            if (is_strongly_connected(d) && is_synchronizing(d)) return d;
        }
    }
};

}  // namespace

TEST_CASE("property: words act as a monoid on state sets") {
    Gen g(101);
    for (int i = 0; i < kCases; ++i) {
        const Dfa d = g.dfa(6, 3);
        const StateSet s = g.subset(d);
        const Word u = g.word(d, 8);
        const Word v = g.word(d, 8);
        INFO(serialize_dfa(d));
        CHECK(apply_word(d, s, u + v) == apply_word(d, apply_word(d, s, u), v));
        CHECK(apply_word(d, s, Word{}) == s);
    }
}

TEST_CASE("property: images are monotone in the starting set") {
    Gen g(202);
    for (int i = 0; i < kCases; ++i) {
        const Dfa d = g.dfa(6, 3);
        const StateSet s = g.subset(d);
        const StateSet t = StateSet::from_mask(d.num_states(), s.mask() | g.subset(d).mask());
        const Word w = g.word(d, 10);
        INFO(serialize_dfa(d));
        CHECK(apply_word(d, s, w).is_subset_of(apply_word(d, t, w)));
    }
}

TEST_CASE("property: a letter never increases cardinality") {
    Gen g(303);
    for (int i = 0; i < kCases; ++i) {
        const Dfa d = g.dfa(6, 3);
        const StateSet s = g.subset(d);
        const Letter l = static_cast<Letter>(g.size(0, d.num_letters() - 1));
        const StateSet image = apply_letter(d, s, l);
        CHECK(image.size() <= s.size());
        // agrees with per-state simulation
        const std::vector<State> members = s.members();
        const std::set<std::uint32_t> start(members.begin(), members.end());
        const auto expected = oracle::image(fixtures::to_table(d), start, {l});
        CHECK(image.members() == std::vector<State>(expected.begin(), expected.end()));
    }
}

TEST_CASE("property: avoidance is closed under prepending") {
    Gen g(404);
    int exercised = 0;
    for (int i = 0; i < kCases; ++i) {
        const Dfa d = g.dfa(6, 3);
        const Word v = g.word(d, 8);
        const Word u = g.word(d, 8);
        const StateSet q = StateSet::full(d.num_states());
        const StateSet image = apply_word(d, q, v);
        for (State s = 0; s < d.num_states(); ++s) {
            if (image.contains(s)) continue;
            ++exercised;
            CHECK_FALSE(apply_word(d, q, u + v).contains(s));
        }
    }
    CHECK(exercised > kCases);
}

TEST_CASE("property: the two synchronization criteria agree") {
    Gen g(505);
    for (int i = 0; i < kCases; ++i) {
        const Dfa d = g.dfa(8, 3);
        const SyncResult r = shortest_sync_word(d);
        INFO(serialize_dfa(d));
        CHECK(is_synchronizing(d) == r.synchronizing);
        CHECK(r.synchronizing == r.shortest_word.has_value());
        if (r.synchronizing) {
            const StateSet image = apply_word(d, StateSet::full(d.num_states()), *r.shortest_word);
            CHECK(image == StateSet(d.num_states(), {*r.final_state}));
        }
    }
}

TEST_CASE("property: max avoiding length <= shortest sync length + 1") {
    Gen g(606);
    for (int i = 0; i < kCases; ++i) {
        const Dfa d = g.sync_strongly_connected(6, 3);
        const std::size_t sync_length = *shortest_sync_word(d).length();
        INFO(serialize_dfa(d));
        for (const AvoidanceRecord& r : avoidance_profile(d)) {
            REQUIRE(r.word);
            CHECK(*r.length() >= 1);
            CHECK(*r.length() <= sync_length + 1);
        }
    }
}

TEST_CASE("property: shortest sync word matches brute force") {
    Gen g(707);
    for (int i = 0; i < kCases; ++i) {
        const Dfa d = g.dfa(5, 2);
        const auto table = fixtures::to_table(d);
        const SyncResult r = shortest_sync_word(d);
        INFO(serialize_dfa(d));
        if (r.synchronizing) {
            const auto brute = oracle::shortest_sync(table, *r.length());
            REQUIRE(brute);
            CHECK(*brute == fixtures::raw(*r.shortest_word));
        } else {
            CHECK_FALSE(oracle::shortest_sync(table, 10));
        }
    }
}

TEST_CASE("property: shortest avoiding words match brute force") {
    Gen g(808);
    for (int i = 0; i < kCases; ++i) {
        const Dfa d = g.dfa(5, 2);
        const auto table = fixtures::to_table(d);
        const State q = static_cast<State>(g.size(0, d.num_states() - 1));
        const AvoidanceRecord r = shortest_avoiding_word(d, q);
        INFO(serialize_dfa(d));
        if (r.word) {
            const auto brute = oracle::shortest_avoiding(table, q, r.word->length());
            REQUIRE(brute);
            CHECK(*brute == fixtures::raw(*r.word));
            CHECK(avoidance_profile(d)[q] == r);
        } else {
            CHECK_FALSE(oracle::shortest_avoiding(table, q, 10));
        }
    }
}
