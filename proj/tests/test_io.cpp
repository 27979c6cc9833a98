#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "synchro/synchro.hpp"

using namespace synchro;

TEST_CASE("parse_dfa reads the counterexample") {
    CHECK(parse_dfa(fixtures::kCexText) == fixtures::cex());
    CHECK(parse_dfa("# fig 1\n\n4 2\n# rows\n1 0\n0 2\n2 3\n0 1") == fixtures::cex());
    CHECK(parse_dfa("1 1\n0\n") == Dfa(1, 1, {0}));
}

TEST_CASE("parse_dfa diagnostics") {
    auto error_of = [](const char* text) -> ParseError {
        try {
            parse_dfa(text);
        } catch (const ParseError& e) {
            return e;
        }
        FAIL("expected a parse error");
        return ParseError("", 0, 0);
    };

    const ParseError range = error_of("2 1\n5\n0\n");
    CHECK(std::string(range.what()).find("entry out of range") != std::string::npos);
    CHECK(range.line() == 2);
    CHECK(range.column() == 1);

    const ParseError count = error_of("2 2\n0 1\n1\n");
    CHECK(std::string(count.what()).find("wrong entry count") != std::string::npos);
    CHECK(count.line() == 3);

    const ParseError rows = error_of("3 1\n0\n1\n");
    CHECK(std::string(rows.what()).find("expected 3 rows, found 2") != std::string::npos);

    const ParseError header = error_of("2\n0\n1\n");
    CHECK(std::string(header.what()).find("malformed header") != std::string::npos);
    CHECK(header.line() == 1);

    CHECK(std::string(error_of("0 1\n").what()).find("malformed header") != std::string::npos);
    CHECK(std::string(error_of("").what()).find("missing") != std::string::npos);
    CHECK(error_of("2 1\n0\n1\n1\n").line() == 4);
    const ParseError junk = error_of("2 1\n0\n1x\n");
    CHECK(junk.line() == 3);
    CHECK(junk.column() == 1);
    CHECK(error_of("1 2\n0  -1\n").column() == 4);
}

TEST_CASE("serialize_dfa") {
    CHECK(serialize_dfa(fixtures::cex()) == fixtures::kCexText);
    CHECK(serialize_dfa(Dfa(1, 1, {0})) == "1 1\n0\n");
}

TEST_CASE("text and JSON round-trips are the identity") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Dfa d = fixtures::from_table(oracle::random_table(rng, 1 + i % 12, 1 + i % 4));
        CHECK(parse_dfa(serialize_dfa(d)) == d);
        CHECK(dfa_from_json(dfa_to_json(d)) == d);
        CHECK(read_dfa(dfa_to_json(d).dump()) == d);
        CHECK(read_dfa(serialize_dfa(d)) == d);
    }
}

TEST_CASE("JSON format") {
    const nlohmann::json j = dfa_to_json(fixtures::cex());
    CHECK(j.dump() == R"({"delta":[[1,0],[0,2],[2,3],[0,1]],"k":2,"n":4})");
    CHECK_THROWS_AS(dfa_from_json(nlohmann::json::parse(R"({"n":2,"k":1,"delta":[[0],[2]]})")), ParseError);
    CHECK_THROWS_AS(dfa_from_json(nlohmann::json::parse(R"({"n":2,"k":1,"delta":[[0]]})")), ParseError);
    CHECK_THROWS_AS(dfa_from_json(nlohmann::json::parse(R"({"n":2,"k":2,"delta":[[0],[1]]})")), ParseError);
    CHECK_THROWS_AS(dfa_from_json(nlohmann::json::parse(R"({"n":2,"delta":[[0],[1]]})")), ParseError);
    CHECK_THROWS_AS(read_dfa("{\"n\": 2,"), ParseError);
    CHECK(read_dfa("# comment\n{\"n\":1,\"k\":1,\"delta\":[[0]]}") == Dfa(1, 1, {0}));
}

TEST_CASE("to_dot") {
    const std::string dot = to_dot(fixtures::cex());
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("q0 -> q1 [label=\"a\"]") != std::string::npos);
    CHECK(dot.find("q0 -> q0 [label=\"b\"]") != std::string::npos);
    CHECK(dot.find("q1 -> q0 [label=\"a\"]") != std::string::npos);
    CHECK(dot.find("q3 -> q1 [label=\"b\"]") != std::string::npos);

    const std::string single = to_dot(Dfa(1, 1, {0}));
    CHECK(single.find("q0 -> q0 [label=\"a\"]") != std::string::npos);
    CHECK(std::count(single.begin(), single.end(), '>') == 1);

    const std::string merged = to_dot(Dfa(1, 3, {0, 0, 0}));
    CHECK(merged.find("q0 -> q0 [label=\"a,b,c\"]") != std::string::npos);

    const std::string quoted = to_dot(Dfa(1, 1, {0}).with_names({"my state"}, {}));
    CHECK(quoted.find("\"my state\" -> \"my state\"") != std::string::npos);
}
