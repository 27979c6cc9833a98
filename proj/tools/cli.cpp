#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "synchro/synchro.hpp"

namespace synchro::cli {

namespace {

using nlohmann::json;

enum class OutputMode { text, json, dot };

struct OutputOptions {
    bool json_flag = false;
    std::string format;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool allow_dot) {
    cmd->add_flag("--json", opts.json_flag, "Machine-readable JSON output");
    std::vector<std::string> formats{"text", "json"};
    if (allow_dot) formats.emplace_back("dot");
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember(formats));
}

OutputMode resolve(const OutputOptions& opts) {
    if (opts.json_flag && !opts.format.empty() && opts.format != "json") {
        throw CLI::ValidationError("--json conflicts with --format " + opts.format);
    }
    if (opts.json_flag || opts.format == "json") return OutputMode::json;
    if (opts.format == "dot") return OutputMode::dot;
    return OutputMode::text;
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open '" + path + "'", 0, 0);
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

Dfa load(const std::string& path, std::istream& in) {
    try {
        return read_dfa(read_input(path, in));
    } catch (const ParseError& e) {
        throw ParseError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what(), 0, 0);
    }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

json word_json(const Dfa& dfa, const Word& w) {
    return {{"length", w.length()},
            {"word", format_word(dfa, w)},
            {"letters", std::vector<Letter>(w.letters().begin(), w.letters().end())}};
}

json record_json(const Dfa& dfa, const AvoidanceRecord& record) {
    json j{{"state", record.state}, {"state_name", dfa.state_name(record.state)}};
    if (record.word) {
        j["length"] = record.word->length();
        j["word"] = format_word(dfa, *record.word);
        j["image"] = apply_word(dfa, StateSet::full(dfa.num_states()), *record.word).members();
    } else {
        j["length"] = nullptr;
        j["word"] = nullptr;
    }
    return j;
}

// verify

void cmd_verify(const Dfa& dfa, OutputMode mode, std::size_t guard, std::ostream& out) {
    const std::size_t n = dfa.num_states();
    const bool strongly_connected = is_strongly_connected(dfa);
    const bool synchronizing = is_synchronizing(dfa);
    std::optional<SyncResult> sync;
    if (synchronizing && n <= guard && n <= StateSet::kMaxUniverse) sync = shortest_sync_word(dfa, guard);
    const BoundsTable b = bounds(n);

    if (mode == OutputMode::json) {
        json j{{"states", n},
               {"letters", dfa.num_letters()},
               {"strongly_connected", strongly_connected},
               {"synchronizing", synchronizing},
               {"shortest_sync_length", nullptr},
               {"shortest_sync_word", nullptr},
               {"bounds",
                {{"cerny", b.cerny}, {"pin_frankl", b.pin_frankl}, {"trahtman_claimed", b.trahtman_claimed.to_string()}}}};
        if (sync) {
            j["shortest_sync_length"] = *sync->length();
            j["shortest_sync_word"] = format_word(dfa, *sync->shortest_word);
            j["within_cerny"] = *sync->length() <= b.cerny;
            j["within_pin_frankl"] = *sync->length() <= b.pin_frankl;
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "states: " << n << "\n";
    out << "letters: " << dfa.num_letters() << "\n";
    out << "strongly_connected: " << yes_no(strongly_connected) << "\n";
    out << "synchronizing: " << yes_no(synchronizing) << "\n";
    if (sync) {
        out << "shortest_sync_length: " << *sync->length() << "\n";
        out << "shortest_sync_word: " << format_word(dfa, *sync->shortest_word) << "\n";
    } else if (synchronizing) {
        out << "shortest_sync_length: skipped (more than " << guard << " states)\n";
    }
    out << "cerny_bound: " << b.cerny << "\n";
    out << "pin_frankl_bound: " << b.pin_frankl << "\n";
    out << "trahtman_claimed_bound: " << b.trahtman_claimed << "\n";
    if (sync) {
        out << "within_cerny: " << yes_no(*sync->length() <= b.cerny) << "\n";
        out << "within_pin_frankl: " << yes_no(*sync->length() <= b.pin_frankl) << "\n";
    }
}

// sync-word

void cmd_sync_word(const Dfa& dfa, OutputMode mode, std::size_t guard, std::ostream& out) {
    const SyncResult result = shortest_sync_word(dfa, guard);
    if (mode == OutputMode::json) {
        json j{{"synchronizing", result.synchronizing}};
        if (result.synchronizing) {
            j.update(word_json(dfa, *result.shortest_word));
            j["final_state"] = *result.final_state;
            j["final_state_name"] = dfa.state_name(*result.final_state);
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "synchronizing: " << yes_no(result.synchronizing) << "\n";
    if (result.synchronizing) {
        out << "length: " << *result.length() << "\n";
        out << "word: " << format_word(dfa, *result.shortest_word) << "\n";
        out << "final_state: " << dfa.state_name(*result.final_state) << "\n";
    }
}

// avoid

void cmd_avoid(const Dfa& dfa, const std::optional<std::string>& state, OutputMode mode, std::size_t guard,
               std::ostream& out) {
    std::vector<AvoidanceRecord> records;
    if (state) {
        records.push_back(shortest_avoiding_word(dfa, parse_state(dfa, *state), guard));
    } else {
        records = avoidance_profile(dfa, guard);
    }
    if (mode == OutputMode::json) {
        if (state) {
            out << record_json(dfa, records.front()).dump(2) << "\n";
        } else {
            json j = json::array();
            for (const auto& r : records) j.push_back(record_json(dfa, r));
            out << j.dump(2) << "\n";
        }
        return;
    }
    if (state) {
        const AvoidanceRecord& r = records.front();
        out << "state: " << dfa.state_name(r.state) << "\n";
        if (r.word) {
            out << "length: " << r.word->length() << "\n";
            out << "word: " << format_word(dfa, *r.word) << "\n";
            out << "image: " << format_state_set(dfa, apply_word(dfa, StateSet::full(dfa.num_states()), *r.word)) << "\n";
        } else {
            out << "length: none (the state lies in every reachable image)\n";
        }
        return;
    }
    for (const AvoidanceRecord& r : records) {
        out << dfa.state_name(r.state) << ": ";
        if (r.word) {
            out << "length " << r.word->length() << ", word " << format_word(dfa, *r.word) << "\n";
        } else {
            out << "no avoiding word\n";
        }
    }
}

// lemma3

std::string hypothesis_failure(const Dfa& dfa) {
    if (!is_strongly_connected(dfa)) return "automaton is not strongly connected";
    if (!is_synchronizing(dfa)) return "automaton is not synchronizing";
    return {};
}

void cmd_lemma3(const Dfa& dfa, OutputMode mode, std::size_t guard, std::ostream& out) {
    const std::size_t n = dfa.num_states();
    const std::string reason = hypothesis_failure(dfa);
    if (!reason.empty()) {
        if (mode == OutputMode::json) {
            out << json{{"applicable", false}, {"reason", reason}}.dump(2) << "\n";
        } else {
            out << "NOT APPLICABLE: " << reason << "\n";
        }
        return;
    }
    const std::vector<AvoidanceRecord> profile = avoidance_profile(dfa, guard);
    const LemmaVerdict verdict = evaluate_lemma3(profile, n);

    if (mode == OutputMode::json) {
        json violators = json::array();
        for (const auto& r : verdict.part1_violators) violators.push_back(record_json(dfa, r));
        json failures = json::array();
        for (const auto& f : verdict.part2_failures) failures.push_back({{"k", f.k}, {"count", f.count}});
        json profile_json = json::array();
        for (const auto& r : profile) profile_json.push_back(record_json(dfa, r));
        out << json{{"applicable", true},
                    {"n", n},
                    {"holds", verdict.holds()},
                    {"part1_holds", verdict.part1_holds},
                    {"part1_violators", violators},
                    {"part2_holds", verdict.part2_holds},
                    {"part2_failures", failures},
                    {"profile", profile_json}}
                       .dump(2)
            << "\n";
        return;
    }
    for (const AvoidanceRecord& r : verdict.part1_violators) {
        out << "VIOLATED (part 1): " << dfa.state_name(r.state);
        if (r.word) {
            out << " requires length " << r.word->length() << " > n=" << n << "\n";
        } else {
            out << " has no avoiding word\n";
        }
    }
    for (const Part2Failure& f : verdict.part2_failures) {
        out << "VIOLATED (part 2): k=" << f.k << " has only " << f.count << " state(s) avoidable within length " << f.k
            << "\n";
    }
    if (verdict.holds()) out << "HOLDS: both clauses satisfied for n=" << n << "\n";
    for (const AvoidanceRecord& r : profile) {
        out << "  " << dfa.state_name(r.state) << ": ";
        if (r.word) {
            out << "length " << r.word->length() << ", word " << format_word(dfa, *r.word) << "\n";
        } else {
            out << "no avoiding word\n";
        }
    }
}

// search

void cmd_search(const SearchParams& params, std::size_t workers, OutputMode mode, std::ostream& out) {
    const SearchReport report = run_search(params, workers);
    if (mode == OutputMode::json) {
        out << serialize_report(report);
        return;
    }
    out << "states: " << params.states << "\n";
    out << "letters: " << params.letters << "\n";
    out << "mode: " << (params.mode == SearchMode::exhaustive ? "exhaustive" : "random") << "\n";
    if (params.mode == SearchMode::random) {
        out << "samples: " << params.samples << "\n";
        out << "seed: " << params.seed << "\n";
    }
    out << "dedup: " << yes_no(params.dedup) << "\n";
    out << "total: " << report.total << "\n";
    out << "strongly_connected: " << report.strongly_connected << "\n";
    out << "synchronizing: " << report.synchronizing << "\n";
    if (report.max_sync) out << "max_sync_length: " << report.max_sync->length << "\n";
    if (report.max_avoidance) {
        const auto& e = *report.max_avoidance;
        out << "max_avoidance_ratio: " << e.ratio.numerator() << "/" << e.ratio.denominator() << " (state "
            << e.automaton.state_name(e.state) << ", length " << e.length << ")\n";
    }
    out << "lemma3_violations: " << report.lemma3_violations << "\n";
    out << "pin_frankl_ok: " << yes_no(report.pin_frankl_ok) << "\n";
}

// gen

void emit_automaton(const Dfa& dfa, OutputMode mode, std::ostream& out) {
    switch (mode) {
        case OutputMode::text: out << serialize_dfa(dfa); break;
        case OutputMode::json: out << dfa_to_json(dfa).dump() << "\n"; break;
        case OutputMode::dot: out << to_dot(dfa); break;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Analysis of synchronizing automata: reset words, avoiding words, exhaustive search"};
    app.name("synchro");
    app.require_subcommand(1);

    std::string file;
    std::size_t guard = kDefaultSubsetGuard;
    OutputOptions output;

    auto add_file_command = [&](const std::string& name, const std::string& description) {
        CLI::App* cmd = app.add_subcommand(name, description);
        cmd->add_option("file", file, "Automaton file (text or JSON), '-' for standard input")->required();
        cmd->add_option("--guard", guard, "Largest automaton for subset searches")->check(CLI::Range(1, 64));
        add_output_options(cmd, output, false);
        return cmd;
    };

    CLI::App* verify = add_file_command("verify", "Strong connectivity, synchronization and length bounds");
    CLI::App* sync_word = add_file_command("sync-word", "Shortest synchronizing word");
    CLI::App* avoid = add_file_command("avoid", "Shortest words avoiding a state (all states by default)");
    std::optional<std::string> state;
    avoid->add_option("--state", state, "State name (q0) or index");
    CLI::App* lemma3 = add_file_command("lemma3", "Check both avoidance clauses on a strongly connected synchronizing automaton");

    SearchParams params;
    std::optional<std::uint64_t> random_samples;
    std::size_t workers = 1;
    CLI::App* search = app.add_subcommand("search", "Enumerate automata and aggregate statistics");
    search->add_option("--states", params.states, "Number of states")->required()->check(CLI::PositiveNumber);
    search->add_option("--letters", params.letters, "Alphabet size")->required()->check(CLI::PositiveNumber);
    search->add_option("--random", random_samples, "Sample N random automata instead of enumerating");
    search->add_option("--seed", params.seed, "Seed for --random");
    search->add_option("--workers", workers, "Worker threads (0 = all cores)");
    search->add_flag("--dedup", params.dedup, "One automaton per isomorphism class (exhaustive only)");
    search->add_option("--witnesses", params.max_witnesses, "Lemma witnesses kept in the report");
    add_output_options(search, output, false);

    CLI::App* gen = app.add_subcommand("gen", "Generate automata");
    gen->require_subcommand(1);
    std::size_t gen_n = 0;
    std::size_t gen_k = 2;
    std::uint64_t gen_seed = 0;
    CLI::App* gen_cerny_cmd = gen->add_subcommand("cerny", "Cerny automaton C_n");
    gen_cerny_cmd->add_option("--n", gen_n, "Number of states")->required();
    add_output_options(gen_cerny_cmd, output, true);
    CLI::App* gen_random_cmd = gen->add_subcommand("random", "Uniform random automaton");
    gen_random_cmd->add_option("--n", gen_n, "Number of states")->required();
    gen_random_cmd->add_option("--k", gen_k, "Alphabet size")->required();
    gen_random_cmd->add_option("--seed", gen_seed, "Seed")->required();
    add_output_options(gen_random_cmd, output, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
        const OutputMode mode = resolve(output);

        if (*verify) {
            cmd_verify(load(file, in), mode, guard, out);
        } else if (*sync_word) {
            cmd_sync_word(load(file, in), mode, guard, out);
        } else if (*avoid) {
            cmd_avoid(load(file, in), state, mode, guard, out);
        } else if (*lemma3) {
            cmd_lemma3(load(file, in), mode, guard, out);
        } else if (*search) {
            if (random_samples) {
                params.mode = SearchMode::random;
                params.samples = *random_samples;
            } else if (search->count("--seed") > 0) {
                throw CLI::ValidationError("--seed requires --random");
            }
            cmd_search(params, workers, mode, out);
        } else if (*gen_cerny_cmd) {
            emit_automaton(gen_cerny(gen_n), mode, out);
        } else if (*gen_random_cmd) {
            emit_automaton(random_dfa(gen_n, gen_k, gen_seed), mode, out);
        }
        return kSuccess;
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageOrParseError;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kGuardExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageOrParseError;
    }
}

}  // namespace synchro::cli
