#pragma once

#include <vector>

#include "oracles.hpp"
#include "synchro/dfa.hpp"

namespace fixtures {

// The four-state counterexample: a: 0->1, 1->0, 2->2, 3->0; b: 0->0, 1->2, 2->3, 3->1.
inline synchro::Dfa cex() { return synchro::Dfa::from_rows({{1, 0}, {0, 2}, {2, 3}, {0, 1}}); }

inline constexpr const char* kCexText = "4 2\n1 0\n0 2\n2 3\n0 1\n";

inline synchro::Dfa from_table(const oracle::Table& t) { return synchro::Dfa(t.n, t.k, t.delta); }

inline oracle::Table to_table(const synchro::Dfa& d) {
    return oracle::Table{d.num_states(), d.num_letters(), std::vector<std::uint32_t>(d.table().begin(), d.table().end())};
}

inline oracle::RawWord raw(const synchro::Word& w) { return oracle::RawWord(w.letters().begin(), w.letters().end()); }

}  // namespace fixtures
