#include "synchro/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "synchro/canonical.hpp"
#include "synchro/error.hpp"
#include "synchro/io.hpp"

namespace synchro {

Dfa gen_cerny(std::size_t n) {
    if (n < 2) throw InvalidArgument("Cerny automaton needs n >= 2, got " + std::to_string(n));
    std::vector<State> table;
    table.reserve(2 * n);
    for (State q = 0; q < n; ++q) {
        table.push_back(static_cast<State>((q + 1) % n));
        table.push_back(q == 0 ? 1 : q);
    }
    return Dfa(n, 2, std::move(table));
}

Dfa random_dfa(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n == 0 || k == 0) throw InvalidArgument("random automaton needs n, k >= 1");
    std::mt19937_64 rng(seed);
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t modulus = n;
    const std::uint64_t excess = (kMax % modulus + 1) % modulus;  // 2^64 mod n
    std::vector<State> table(n * k);
    for (State& entry : table) {
        std::uint64_t x = rng();
        while (excess != 0 && x > kMax - excess) x = rng();
        entry = static_cast<State>(x % modulus);
    }
    return Dfa(n, k, std::move(table));
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + index + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::optional<std::uint64_t> table_count(std::size_t n, std::size_t k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n * k; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / n) return std::nullopt;
        count *= n;
    }
    return count;
}

void validate(const SearchParams& params) {
    if (params.states == 0 || params.letters == 0) throw InvalidArgument("search needs at least one state and one letter");
    if (params.states > params.subset_guard) {
        throw GuardExceeded("search is limited to " + std::to_string(params.subset_guard) + " states by the subset guard");
    }
    if (params.mode == SearchMode::exhaustive) {
        const auto count = table_count(params.states, params.letters);
        if (!count || *count > params.max_tables) {
            throw GuardExceeded("exhaustive search over " + std::to_string(params.states) + " states and " +
                                std::to_string(params.letters) + " letters exceeds the ceiling of " +
                                std::to_string(params.max_tables) + " tables");
        }
        if (params.dedup &&
            (params.states > kCanonicalMaxStates || params.letters > kCanonicalMaxLetters)) {
            throw GuardExceeded("deduplication is limited to " + std::to_string(kCanonicalMaxStates) + " states and " +
                                std::to_string(kCanonicalMaxLetters) + " letters");
        }
    } else if (params.dedup) {
        throw InvalidArgument("deduplication applies to exhaustive searches only");
    }
}

Dfa table_at(std::size_t n, std::size_t k, std::uint64_t index) {
    std::vector<State> table(n * k);
    for (std::size_t i = table.size(); i-- > 0;) {
        table[i] = static_cast<State>(index % n);
        index /= n;
    }
    if (index != 0) throw InvalidArgument("table index out of range");
    return Dfa(n, k, std::move(table));
}

// DfaStream

DfaStream::DfaStream(const SearchParams& params) : DfaStream(params, 0, std::numeric_limits<std::uint64_t>::max()) {}

DfaStream::DfaStream(const SearchParams& params, std::uint64_t begin, std::uint64_t end) : params_(params) {
    validate(params_);
    index_count_ = params_.mode == SearchMode::exhaustive ? *table_count(params_.states, params_.letters)
                                                          : params_.samples;
    end_ = std::min(end, index_count_);
    position_ = std::min(begin, end_);
}

bool DfaStream::advance() {
    // Mixed-radix increment, last entry fastest.
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (++digits_[i] < params_.states) return true;
        digits_[i] = 0;
    }
    return false;
}

std::optional<Dfa> DfaStream::next() {
    const std::size_t n = params_.states;
    const std::size_t k = params_.letters;
    while (position_ < end_) {
        if (params_.mode == SearchMode::random) {
            return random_dfa(n, k, sample_seed(params_.seed, position_++));
        }
        if (!started_) {
            const Dfa first = table_at(n, k, position_);
            digits_.assign(first.table().begin(), first.table().end());
            started_ = true;
        } else {
            advance();
        }
        ++position_;
        Dfa dfa(n, k, digits_);
        if (params_.dedup && !is_canonical(dfa)) continue;
        return dfa;
    }
    return std::nullopt;
}

void enumerate_dfas(const SearchParams& params, const std::function<void(const Dfa&)>& fn) {
    DfaStream stream(params);
    while (auto dfa = stream.next()) fn(*dfa);
}

// Reports

bool serialized_less(const Dfa& a, const Dfa& b) {
    if (a.num_states() != b.num_states() || a.num_letters() != b.num_letters()) {
        return serialize_dfa(a) < serialize_dfa(b);
    }
    // Separators sit at identical offsets and sort below digits, so the first
    // differing entry decides, compared as decimal strings.
    const auto ta = a.table();
    const auto tb = b.table();
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i] != tb[i]) return std::to_string(ta[i]) < std::to_string(tb[i]);
    }
    return false;
}

namespace {

template <typename Extreme, typename Key>
void offer(std::optional<Extreme>& slot, const Extreme& candidate, Key key) {
    if (!slot) {
        slot = candidate;
        return;
    }
    const auto ours = key(*slot);
    const auto theirs = key(candidate);
    if (theirs > ours || (theirs == ours && serialized_less(candidate.automaton, slot->automaton))) {
        slot = candidate;
    }
}

void offer(std::optional<AvoidanceExtreme>& slot, const AvoidanceExtreme& candidate) {
    if (!slot || candidate.ratio > slot->ratio) {
        slot = candidate;
        return;
    }
    if (candidate.ratio < slot->ratio) return;
    if (serialized_less(candidate.automaton, slot->automaton) ||
        (candidate.automaton == slot->automaton && candidate.state < slot->state)) {
        slot = candidate;
    }
}

void offer_witness(std::vector<LemmaWitness>& witnesses, const LemmaWitness& candidate, std::size_t limit) {
    auto less = [](const LemmaWitness& x, const LemmaWitness& y) { return serialized_less(x.automaton, y.automaton); };
    const auto it = std::lower_bound(witnesses.begin(), witnesses.end(), candidate, less);
    if (it != witnesses.end() && it->automaton == candidate.automaton) return;
    if (static_cast<std::size_t>(it - witnesses.begin()) >= limit) return;
    witnesses.insert(it, candidate);
    if (witnesses.size() > limit) witnesses.pop_back();
}

std::int64_t bound_slack(const BoundWorst& w) {
    return static_cast<std::int64_t>(w.length) - static_cast<std::int64_t>(w.bound);
}

}  // namespace

void SearchReport::add(const Dfa& dfa) {
    ++total;
    if (!is_strongly_connected(dfa)) return;
    ++strongly_connected;
    const SyncResult sync = shortest_sync_word(dfa, params.subset_guard);
    if (!sync.synchronizing) return;
    ++synchronizing;

    const std::size_t n = dfa.num_states();
    const std::size_t length = *sync.length();
    offer(max_sync, SyncExtreme{length, dfa}, [](const SyncExtreme& e) { return e.length; });

    const std::uint64_t bound = bounds(n).pin_frankl;
    if (length > bound) pin_frankl_ok = false;
    offer(bound_worst, BoundWorst{length, bound, dfa}, bound_slack);

    const std::vector<AvoidanceRecord> profile = avoidance_profile(dfa, params.subset_guard);
    LemmaVerdict verdict = evaluate_lemma3(profile, n);
    if (!verdict.holds()) {
        ++lemma3_violations;
        offer_witness(lemma3_witnesses, LemmaWitness{dfa, std::move(verdict)}, params.max_witnesses);
    }

    if (n >= 2) {
        const Rational ratio = max_avoidance_ratio(profile, n);
        const auto longest = std::max_element(profile.begin(), profile.end(), [](const auto& x, const auto& y) {
            return *x.length() < *y.length();
        });
        offer(max_avoidance, AvoidanceExtreme{ratio, dfa, longest->state, *longest->length()});
    }
}

void SearchReport::merge(const SearchReport& other) {
    total += other.total;
    strongly_connected += other.strongly_connected;
    synchronizing += other.synchronizing;
    if (other.max_sync) offer(max_sync, *other.max_sync, [](const SyncExtreme& e) { return e.length; });
    if (other.max_avoidance) offer(max_avoidance, *other.max_avoidance);
    lemma3_violations += other.lemma3_violations;
    for (const LemmaWitness& w : other.lemma3_witnesses) offer_witness(lemma3_witnesses, w, params.max_witnesses);
    pin_frankl_ok = pin_frankl_ok && other.pin_frankl_ok;
    if (other.bound_worst) offer(bound_worst, *other.bound_worst, bound_slack);
}

SearchReport run_search(const SearchParams& params, std::size_t workers) {
    validate(params);
    if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());

    SearchReport report;
    report.params = params;
    const std::uint64_t count = DfaStream(params).index_count();
    if (workers == 1) {
        DfaStream stream(params);
        while (auto dfa = stream.next()) report.add(*dfa);
        return report;
    }

    // Contiguous chunks handed out dynamically; partial reports merged in chunk order.
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(count, workers * 16));
    std::vector<SearchReport> partials(chunks);
    std::atomic<std::uint64_t> next_chunk{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        try {
            for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
                const std::uint64_t begin = count / chunks * c + std::min(c, count % chunks);
                const std::uint64_t end = begin + count / chunks + (c < count % chunks ? 1 : 0);
                SearchReport& partial = partials[c];
                partial.params = params;
                DfaStream stream(params, begin, end);
                while (auto dfa = stream.next()) partial.add(*dfa);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next_chunk = chunks;
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) threads.emplace_back(work);
    for (std::thread& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);

    for (const SearchReport& partial : partials) report.merge(partial);
    return report;
}

// JSON

namespace {

std::string fraction(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json verdict_to_json(const LemmaVerdict& verdict) {
    nlohmann::json violators = nlohmann::json::array();
    for (const AvoidanceRecord& record : verdict.part1_violators) {
        const auto length = record.length();
        violators.push_back({{"state", record.state}, {"length", length ? nlohmann::json(*length) : nlohmann::json()}});
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const Part2Failure& failure : verdict.part2_failures) {
        failures.push_back({{"k", failure.k}, {"count", failure.count}});
    }
    return {{"part1_holds", verdict.part1_holds},
            {"part1_violators", std::move(violators)},
            {"part2_holds", verdict.part2_holds},
            {"part2_failures", std::move(failures)}};
}

}  // namespace

nlohmann::json report_to_json(const SearchReport& report) {
    const SearchParams& p = report.params;
    nlohmann::json params{{"states", p.states},
                          {"letters", p.letters},
                          {"mode", p.mode == SearchMode::exhaustive ? "exhaustive" : "random"},
                          {"dedup", p.dedup},
                          {"max_witnesses", p.max_witnesses}};
    if (p.mode == SearchMode::random) {
        params["samples"] = p.samples;
        params["seed"] = p.seed;
    }

    nlohmann::json j;
    j["params"] = std::move(params);
    j["counts"] = {{"total", report.total},
                   {"strongly_connected", report.strongly_connected},
                   {"synchronizing", report.synchronizing}};

    j["max_sync"] = nullptr;
    if (report.max_sync) {
        j["max_sync"] = {{"length", report.max_sync->length}, {"automaton", dfa_to_json(report.max_sync->automaton)}};
    }

    j["max_avoidance"] = nullptr;
    if (report.max_avoidance) {
        const AvoidanceExtreme& e = *report.max_avoidance;
        j["max_avoidance"] = {{"ratio", fraction(e.ratio)},
                              {"automaton", dfa_to_json(e.automaton)},
                              {"state", e.state},
                              {"length", e.length}};
    }

    nlohmann::json witnesses = nlohmann::json::array();
    for (const LemmaWitness& w : report.lemma3_witnesses) {
        nlohmann::json entry = verdict_to_json(w.verdict);
        entry["automaton"] = dfa_to_json(w.automaton);
        witnesses.push_back(std::move(entry));
    }
    j["lemma3"] = {{"violations", report.lemma3_violations}, {"witnesses", std::move(witnesses)}};

    nlohmann::json worst = nullptr;
    if (report.bound_worst) {
        worst = {{"length", report.bound_worst->length},
                 {"bound", report.bound_worst->bound},
                 {"automaton", dfa_to_json(report.bound_worst->automaton)}};
    }
    j["bound_check"] = {{"pin_frankl_ok", report.pin_frankl_ok}, {"worst", std::move(worst)}};
    return j;
}

std::string serialize_report(const SearchReport& report) { return report_to_json(report).dump(2) + "\n"; }

std::vector<std::string> verify_witnesses(const SearchReport& report) {
    std::vector<std::string> problems;
    const std::size_t guard = report.params.subset_guard;
    auto sync_length = [&](const Dfa& dfa) -> std::optional<std::size_t> {
        if (!is_strongly_connected(dfa)) return std::nullopt;
        return shortest_sync_word(dfa, guard).length();
    };

    if (report.max_sync && sync_length(report.max_sync->automaton) != report.max_sync->length) {
        problems.push_back("max_sync witness does not reproduce length " + std::to_string(report.max_sync->length));
    }
    if (report.bound_worst) {
        const BoundWorst& w = *report.bound_worst;
        if (sync_length(w.automaton) != w.length || bounds(w.automaton.num_states()).pin_frankl != w.bound) {
            problems.push_back("bound_check worst case does not reproduce");
        }
    }
    if (report.max_avoidance) {
        const AvoidanceExtreme& e = *report.max_avoidance;
        try {
            const auto profile = avoidance_profile(e.automaton, guard);
            if (max_avoidance_ratio(e.automaton, guard) != e.ratio || profile.at(e.state).length() != e.length) {
                problems.push_back("max_avoidance witness does not reproduce ratio " + e.ratio.to_string());
            }
        } catch (const Error& err) {
            problems.push_back(std::string("max_avoidance witness: ") + err.what());
        }
    }
    for (const LemmaWitness& w : report.lemma3_witnesses) {
        try {
            if (!(check_lemma3(w.automaton, guard) == w.verdict)) {
                problems.push_back("lemma3 witness verdict differs for\n" + serialize_dfa(w.automaton));
            }
        } catch (const Error& err) {
            problems.push_back(std::string("lemma3 witness: ") + err.what());
        }
    }
    return problems;
}

}  // namespace synchro
