#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "synchro/synchro.hpp"

using namespace synchro;

TEST_CASE("StateSet basics") {
    StateSet s(5, {0, 3});
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK(s.members() == std::vector<State>{0, 3});
    CHECK(s.is_subset_of(StateSet::full(5)));
    CHECK_FALSE(StateSet::full(5).is_subset_of(s));
    s.erase(0);
    CHECK(s == StateSet(5, {3}));
    CHECK(StateSet::full(64).size() == 64);
    CHECK_THROWS_AS(s.insert(5), InvalidArgument);
    CHECK_THROWS_AS(StateSet(65), GuardExceeded);
    CHECK_THROWS_AS(StateSet::from_mask(3, 0b1000), InvalidArgument);
    CHECK_THROWS_AS(s.is_subset_of(StateSet(4)), InvalidArgument);
}

TEST_CASE("Dfa validation") {
    CHECK_THROWS_AS(Dfa(0, 1, {}), InvalidArgument);
    CHECK_THROWS_AS(Dfa(1, 0, {}), InvalidArgument);
    CHECK_THROWS_AS(Dfa(2, 1, {0}), InvalidArgument);
    CHECK_THROWS_AS(Dfa(2, 1, {0, 2}), InvalidArgument);
    CHECK_THROWS_AS(Dfa::from_rows({{0, 1}, {0}}), InvalidArgument);
    const Dfa d = fixtures::cex();
    CHECK(d.num_states() == 4);
    CHECK(d.num_letters() == 2);
    CHECK(d.next(3, 1) == 1);
}

TEST_CASE("default names") {
    const Dfa d = fixtures::cex();
    CHECK(d.state_name(2) == "q2");
    CHECK(d.letter_name(1) == "b");
    CHECK(default_letter_name(25, 26) == "z");
    CHECK(default_letter_name(3, 27) == "l3");
    const Dfa named = d.with_names({"s", "t", "u", "v"}, {"x", "y"});
    CHECK(named.state_name(3) == "v");
    CHECK(named == d);
    CHECK(format_word(named, Word{0, 1}) == "xy");
    CHECK_THROWS_AS(d.with_names({"s"}, {}), InvalidArgument);
}

TEST_CASE("apply_letter") {
    const Dfa d = fixtures::cex();
    CHECK(apply_letter(d, StateSet::full(4), 0) == StateSet(4, {0, 1, 2}));
    CHECK(apply_letter(d, StateSet(4), 1).empty());
    CHECK(apply_letter(d, StateSet(4, {0}), 1) == StateSet(4, {0}));
    CHECK_THROWS_AS(apply_letter(d, StateSet::full(4), 2), InvalidArgument);
    CHECK_THROWS_AS(apply_letter(d, StateSet::full(3), 0), InvalidArgument);
}

TEST_CASE("apply_word") {
    const Dfa d = fixtures::cex();
    const StateSet q = StateSet::full(4);
    CHECK(apply_word(d, q, parse_word(d, "abbababba")) == StateSet(4, {0}));
    const StateSet avoid = apply_word(d, q, parse_word(d, "abbaba"));
    CHECK_FALSE(avoid.contains(0));
    CHECK(avoid == StateSet(4, {1, 2}));
    CHECK(apply_word(d, q, Word{}) == q);
    CHECK(apply_word(d, State{2}, Word{1, 1}) == 1);
    CHECK_THROWS_AS(apply_word(d, q, Word{0, 7}), InvalidArgument);
}

TEST_CASE("words and states round-trip through their text forms") {
    const Dfa d = fixtures::cex();
    const Word w = parse_word(d, "abba");
    CHECK(w == Word{0, 1, 1, 0});
    CHECK(format_word(d, w) == "abba");
    CHECK(Word{0} + Word{1, 1} == Word{0, 1, 1});
    CHECK_THROWS_AS(parse_word(d, "abc"), InvalidArgument);
    CHECK(parse_state(d, "q3") == 3);
    CHECK(parse_state(d, "2") == 2);
    CHECK_THROWS_AS(parse_state(d, "q4"), InvalidArgument);
    CHECK_THROWS_AS(parse_state(d, "x"), InvalidArgument);
    CHECK(format_state_set(d, StateSet(4, {1, 3})) == "{q1,q3}");

    const Dfa wide(1, 30, std::vector<State>(30, 0));
    CHECK(format_word(wide, Word{0, 12, 29}) == "l0 l12 l29");
    CHECK(parse_word(wide, "l0 l12  l29") == Word{0, 12, 29});
}

TEST_CASE("is_strongly_connected") {
    CHECK(is_strongly_connected(fixtures::cex()));
    CHECK(is_strongly_connected(Dfa(1, 1, {0})));
    CHECK_FALSE(is_strongly_connected(Dfa(2, 1, {1, 1})));
    CHECK(is_strongly_connected(gen_cerny(5)));
    // two disjoint cycles
    CHECK_FALSE(is_strongly_connected(Dfa::from_rows({{1}, {0}, {3}, {2}})));
}

TEST_CASE("is_strongly_connected agrees with transitive closure") {
    std::mt19937 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto t = oracle::random_table(rng, 1 + i % 6, 1 + i % 3);
        CHECK(is_strongly_connected(fixtures::from_table(t)) == oracle::strongly_connected(t));
    }
}

TEST_CASE("Rational") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational::parse("38/3") == Rational(38, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("1/x"), InvalidArgument);
}
