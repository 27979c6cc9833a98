#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "synchro/avoid.hpp"
#include "synchro/dfa.hpp"
#include "synchro/rational.hpp"
#include "synchro/sync.hpp"

namespace synchro {

/// The classical extremal family: a cycles i -> i+1 mod n, b maps 0 -> 1 and
/// fixes every other state. Requires n >= 2.
Dfa gen_cerny(std::size_t n);

/// Uniform random table. Entries are drawn row-major from std::mt19937_64
/// seeded with `seed`, each by rejection sampling (draws x >= 2^64 - 2^64 mod n
/// are discarded, the entry is x mod n). Output is stable across platforms.
Dfa random_dfa(std::size_t n, std::size_t k, std::uint64_t seed);

/// Seed of the i-th sample of a random search (splitmix64 of seed + i).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

enum class SearchMode { exhaustive, random };

struct SearchParams {
    std::size_t states = 0;
    std::size_t letters = 0;
    SearchMode mode = SearchMode::exhaustive;
    /// Random mode only.
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Exhaustive mode only: one representative (the canonical form) per
    /// isomorphism class.
    bool dedup = false;
    /// Lemma witnesses kept in the report (the least by serialized form).
    std::size_t max_witnesses = 10;
    /// Ceiling on n^(n*k) for exhaustive mode. The default admits n <= 5 at
    /// k = 2 and n <= 4 at k = 3.
    std::uint64_t max_tables = std::uint64_t{1} << 24;
    std::size_t subset_guard = kDefaultSubsetGuard;
};

/// n^(n*k), or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> table_count(std::size_t n, std::size_t k);

/// Throws GuardExceeded / InvalidArgument for unusable parameters.
void validate(const SearchParams& params);

/// Decodes the index-th table of the exhaustive enumeration. The order is a
/// mixed-radix counter over the row-major entries with the last entry least
/// significant, i.e. lexicographic order of tables.
Dfa table_at(std::size_t n, std::size_t k, std::uint64_t index);

/// Yields the automata of a search one at a time.
class DfaStream {
public:
    explicit DfaStream(const SearchParams& params);
    /// Restricts an exhaustive stream to table indices [begin, end), or a
    /// random stream to sample indices [begin, end).
    DfaStream(const SearchParams& params, std::uint64_t begin, std::uint64_t end);

    std::optional<Dfa> next();

    /// Total number of indices of the unrestricted stream.
    std::uint64_t index_count() const noexcept { return index_count_; }

private:
    bool advance();

    SearchParams params_;
    std::uint64_t index_count_ = 0;
    std::uint64_t position_ = 0;
    std::uint64_t end_ = 0;
    std::vector<State> digits_;
    bool started_ = false;
};

/// Calls fn on every automaton of the search, in stream order.
void enumerate_dfas(const SearchParams& params, const std::function<void(const Dfa&)>& fn);

/// Order used for tie-breaking: comparison of serialize_dfa texts, computed
/// without building the strings.
bool serialized_less(const Dfa& a, const Dfa& b);

struct SyncExtreme {
    std::size_t length = 0;
    Dfa automaton;
};

struct AvoidanceExtreme {
    Rational ratio;
    Dfa automaton;
    State state = 0;
    std::size_t length = 0;
};

struct LemmaWitness {
    Dfa automaton;
    LemmaVerdict verdict;
};

struct BoundWorst {
    std::size_t length = 0;
    std::uint64_t bound = 0;
    Dfa automaton;
};

/// Aggregate statistics over the strongly connected synchronizing automata of
/// a search. Merging is associative and commutative, so partial reports from
/// any partition of the input combine to the same result.
struct SearchReport {
    SearchParams params;
    std::uint64_t total = 0;
    std::uint64_t strongly_connected = 0;
    /// Strongly connected and synchronizing.
    std::uint64_t synchronizing = 0;
    std::optional<SyncExtreme> max_sync;
    std::optional<AvoidanceExtreme> max_avoidance;
    std::uint64_t lemma3_violations = 0;
    std::vector<LemmaWitness> lemma3_witnesses;
    bool pin_frankl_ok = true;
    std::optional<BoundWorst> bound_worst;

    /// Folds one automaton into the report.
    void add(const Dfa& dfa);
    void merge(const SearchReport& other);
};

/// Runs the search on `workers` threads (0 = hardware concurrency). The
/// report does not depend on the worker count.
SearchReport run_search(const SearchParams& params, std::size_t workers = 1);

nlohmann::json report_to_json(const SearchReport& report);
/// report_to_json(report).dump(2) plus a trailing newline.
std::string serialize_report(const SearchReport& report);

/// Re-analyzes every stored witness standalone; returns a description of each
/// mismatch (empty when the report is consistent).
std::vector<std::string> verify_witnesses(const SearchReport& report);

}  // namespace synchro
