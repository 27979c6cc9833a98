#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "synchro/synchro.hpp"

using namespace synchro;

namespace {

// Self-loop counts per letter, sorted: invariant under joint relabeling.
std::vector<std::size_t> loop_profile(const Dfa& d) {
    std::vector<std::size_t> loops(d.num_letters(), 0);
    for (State q = 0; q < d.num_states(); ++q)
        for (Letter l = 0; l < d.num_letters(); ++l)
            if (d.next(q, l) == q) ++loops[l];
    std::sort(loops.begin(), loops.end());
    return loops;
}

}  // namespace

TEST_CASE("relabel applies the permutation pair") {
    const Dfa d = fixtures::cex();
    const Relabeling swap13{{0, 3, 2, 1}, {0, 1}};
    const Dfa r = relabel(d, swap13);
    CHECK(r.next(0, 0) == 3);  // 0 -a-> 1 becomes 0 -a-> 3
    CHECK(relabel(r, swap13) == d);
    CHECK_THROWS_AS(relabel(d, Relabeling{{0, 0, 1, 2}, {0, 1}}), InvalidArgument);
    CHECK_THROWS_AS(relabel(d, Relabeling{{0, 1, 2, 3}, {0}}), InvalidArgument);
}

TEST_CASE("canonical_form examples") {
    const Dfa cex = fixtures::cex();
    const Dfa canon = canonical_form(cex);
    CHECK(canonical_form(canon) == canon);
    CHECK(is_canonical(canon));
    CHECK(canonical_form(relabel(cex, Relabeling{{0, 3, 2, 1}, {0, 1}})) == canon);
    CHECK(canonical_form(relabel(cex, Relabeling{{2, 0, 3, 1}, {1, 0}})) == canon);

    const Dfa cerny4 = gen_cerny(4);
    CHECK(loop_profile(cex) != loop_profile(cerny4));
    CHECK(canonical_form(cerny4) != canon);
    CHECK_FALSE(find_isomorphism(cex, cerny4));
}

TEST_CASE("canonical_form guard") {
    CHECK_THROWS_AS(canonical_form(Dfa(9, 1, std::vector<State>(9, 0))), GuardExceeded);
    CHECK_THROWS_AS(canonical_form(Dfa(1, 4, std::vector<State>(4, 0))), GuardExceeded);
    CHECK_NOTHROW(canonical_form(Dfa(8, 1, std::vector<State>(8, 0))));
}

TEST_CASE("canonical form is the least table of the brute-force orbit") {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto t = oracle::random_table(rng, 1 + i % 5, 1 + i % 3);
        const auto orbit = oracle::orbit(t);
        const auto least = *std::min_element(orbit.begin(), orbit.end());
        const Dfa d = fixtures::from_table(t);
        CHECK(canonical_form(d) == Dfa(t.n, t.k, least));
        CHECK(is_canonical(d) == (t.delta == least));
    }
}

TEST_CASE("canonical form is isomorphic to its input, with an explicit witness") {
    std::mt19937 rng(17);
    for (int i = 0; i < 300; ++i) {
        const Dfa d = fixtures::from_table(oracle::random_table(rng, 1 + i % 5, 1 + i % 3));
        const CanonicalForm c = canonical_form_with_relabeling(d);
        CHECK(relabel(d, c.relabeling) == c.automaton);
        const auto iso = find_isomorphism(d, c.automaton);
        REQUIRE(iso);
        CHECK(relabel(d, *iso) == c.automaton);
    }
}

TEST_CASE("find_isomorphism on shuffled copies") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + i % 5;
        const std::size_t k = 1 + i % 2;
        const Dfa d = fixtures::from_table(oracle::random_table(rng, n, k));
        std::vector<State> sp(n);
        std::iota(sp.begin(), sp.end(), 0U);
        std::shuffle(sp.begin(), sp.end(), rng);
        std::vector<Letter> lp(k);
        std::iota(lp.begin(), lp.end(), 0U);
        std::shuffle(lp.begin(), lp.end(), rng);
        const Dfa shuffled = relabel(d, Relabeling{sp, lp});
        const auto iso = find_isomorphism(d, shuffled);
        REQUIRE(iso);
        CHECK(relabel(d, *iso) == shuffled);
    }
    CHECK_FALSE(find_isomorphism(Dfa(1, 1, {0}), Dfa(2, 1, {0, 0})));
}
