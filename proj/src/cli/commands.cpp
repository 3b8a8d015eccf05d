#include "gapmatch/cli/commands.hpp"

#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapmatch/cli/bench.hpp"
#include "gapmatch/cli/report.hpp"
#include "gapmatch/error.hpp"
#include "gapmatch/ingestion.hpp"
#include "gapmatch/matcher.hpp"
#include "gapmatch/oracle.hpp"
#include "gapmatch/sax.hpp"

namespace gapmatch::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Thrown for flag values that parse but make no sense; maps to kExitUsage.
struct UsageError : Error {
    using Error::Error;
};

const std::vector<std::string> kAlgorithms = {"netndp", "netndp-nonp", "netlap", "greedy",
                                              "enumerate"};

struct InputOptions {
    std::vector<std::string> inputs;
    std::vector<std::string> literals;
    std::string format = "auto";
    std::string column = "0";
    std::size_t paa_segments = 0;  // 0 = series length
    std::size_t sax_alphabet_size = 20;
    std::string alphabet;
    bool lenient = false;
};

struct ThresholdOptions {
    Distance delta = 0;
    Distance gamma = 0;
    std::string metric = "ordinal";
};

void add_input_flags(CLI::App& cmd, InputOptions& in) {
    cmd.add_option("--input,-i", in.inputs, "Sequence file (repeatable)");
    cmd.add_option("--sequence,-s", in.literals, "Literal sequence text (repeatable)");
    cmd.add_option("--format", in.format, "Input format")
        ->check(CLI::IsMember({"auto", "fasta", "plain", "csv"}))
        ->capture_default_str();
    cmd.add_option("--column", in.column, "CSV column name or 0-based index")
        ->capture_default_str();
    cmd.add_option("--paa-segments", in.paa_segments,
                   "SAX frame count for CSV input (0 = one frame per value)")
        ->capture_default_str();
    cmd.add_option("--sax-alphabet-size", in.sax_alphabet_size, "SAX alphabet size (2..26)")
        ->capture_default_str();
    cmd.add_option("--alphabet", in.alphabet,
                   "Ordered symbols: 'lower', 'upper', a file with one line of symbols, or the "
                   "symbols themselves. Default: from the pattern's case (SAX letters for CSV)");
    cmd.add_flag("--lenient", in.lenient,
                 "Accept input symbols outside the alphabet; they never match");
}

void add_threshold_flags(CLI::App& cmd, ThresholdOptions& t, bool required) {
    auto* d = cmd.add_option("--delta", t.delta, "Local threshold")->check(CLI::NonNegativeNumber);
    auto* g = cmd.add_option("--gamma", t.gamma, "Global threshold")->check(CLI::NonNegativeNumber);
    if (required) {
        d->required();
        g->required();
    } else {
        d->capture_default_str();
        g->capture_default_str();
    }
    cmd.add_option("--metric", t.metric,
                   "ordinal (|rank difference|) or hamming (0/1 per position; use --delta 1 "
                   "--gamma h)")
        ->check(CLI::IsMember({"ordinal", "hamming", "indicator"}))
        ->capture_default_str();
}

Alphabet resolve_alphabet(const InputOptions& in, const std::vector<std::string>& patterns,
                          bool csv) {
    const auto& choice = in.alphabet;
    if (choice == "lower")
        return Alphabet::lowercase();
    if (choice == "upper")
        return Alphabet::uppercase();
    if (!choice.empty()) {
        if (std::filesystem::is_regular_file(choice))
            return read_alphabet_file(choice);
        return Alphabet(choice);
    }
    if (csv)
        return Alphabet::uppercase_prefix(in.sax_alphabet_size);
    for (const auto& p : patterns)
        for (char c : p)
            if (std::islower(static_cast<unsigned char>(c)))
                return Alphabet::lowercase();
    return Alphabet::uppercase();
}

std::string detect_format(const std::string& path, const std::string& requested) {
    if (requested != "auto")
        return requested;
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".csv")
        return "csv";
    std::ifstream in(path);
    char c = 0;
    while (in.get(c))
        if (!std::isspace(static_cast<unsigned char>(c)))
            return c == '>' ? "fasta" : "plain";
    return "plain";
}

bool any_csv(const InputOptions& in) {
    for (const auto& path : in.inputs)
        if (detect_format(path, in.format) == "csv")
            return true;
    return false;
}

std::vector<RankedSequence> load_sequences(const InputOptions& in, const Alphabet& alphabet) {
    const auto strictness = in.lenient ? Strictness::lenient : Strictness::strict;
    std::vector<RankedSequence> out;
    for (std::size_t k = 0; k < in.literals.size(); ++k)
        out.push_back(rank_sequence(in.literals[k], alphabet, strictness,
                                    "seq" + std::to_string(k + 1)));
    for (const auto& path : in.inputs) {
        const auto format = detect_format(path, in.format);
        if (format == "fasta") {
            for (auto& s : read_fasta(path, alphabet, strictness))
                out.push_back(std::move(s));
        } else if (format == "plain") {
            out.push_back(read_plain(path, alphabet, strictness));
        } else {
            const auto series = read_series_csv(path, in.column);
            const auto segments = in.paa_segments == 0 ? series.values.size() : in.paa_segments;
            const auto symbolized = sax::symbolize(series, segments, in.sax_alphabet_size);
            out.push_back(rank_sequence(symbolized.symbols, alphabet, strictness,
                                        path + ":" + series.label));
        }
    }
    if (out.empty())
        throw UsageError("no input: give --input or --sequence");
    return out;
}

MatchReport run_algorithm(const std::string& name, const RankedSequence& seq,
                          const Pattern& pattern, Thresholds limits, Metric metric) {
    if (name == "netndp")
        return net_ndp(seq, pattern, limits, metric, true);
    if (name == "netndp-nonp")
        return net_ndp(seq, pattern, limits, metric, false);
    if (name == "netlap")
        return netlap_variant(seq, pattern, limits, metric);
    if (name == "greedy")
        return greedy_leftmost(seq, pattern, limits, metric);
    if (name == "enumerate") {
        MatchReport report;
        report.algorithm = "enumerate";
        const auto start = Clock::now();
        report.occurrences = enumerate_all(seq, pattern, limits, metric);
        report.elapsed = Clock::now() - start;
        attach_profiles(report, seq, pattern, limits, metric, false);
        return report;
    }
    throw UsageError("unknown algorithm '" + name + "'");
}

// Runs `tasks` on up to `jobs` threads; results keep task order.
template <typename T>
std::vector<T> run_jobs(const std::vector<std::function<T()>>& tasks, unsigned jobs) {
    std::vector<std::optional<T>> slots(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            try {
                slots[k] = tasks[k]();
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }
    std::vector<T> out;
    out.reserve(tasks.size());
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        if (errors[k])
            std::rethrow_exception(errors[k]);
        out.push_back(std::move(*slots[k]));
    }
    return out;
}

struct Prepared {
    Alphabet alphabet;
    std::vector<Pattern> patterns;
    std::vector<RankedSequence> sequences;
    Thresholds limits;
    Metric metric;
};

// Pattern and alphabet problems are usage errors; input problems are data errors.
Prepared prepare(const InputOptions& in, const std::vector<std::string>& pattern_texts,
                 const ThresholdOptions& t) {
    std::optional<Alphabet> alphabet;
    std::vector<Pattern> patterns;
    try {
        alphabet = resolve_alphabet(in, pattern_texts, any_csv(in));
        for (const auto& text : pattern_texts)
            patterns.push_back(parse_pattern(text, *alphabet));
    } catch (const IoError&) {
        throw;
    } catch (const DataError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    auto sequences = load_sequences(in, *alphabet);
    return {*alphabet, std::move(patterns), std::move(sequences), {t.delta, t.gamma},
            metric_from_string(t.metric)};
}

int cmd_match(const InputOptions& in, const std::string& pattern_text, const ThresholdOptions& t,
              const std::string& algorithm, const std::string& output, bool stats,
              std::ostream& out) {
    const auto prepared = prepare(in, {pattern_text}, t);
    std::vector<SequenceReport> reports;
    for (const auto& seq : prepared.sequences)
        reports.push_back({seq.source_id, run_algorithm(algorithm, seq, prepared.patterns.front(),
                                                        prepared.limits, prepared.metric)});
    if (output == "json")
        write_json(out, reports);
    else if (output == "csv")
        write_csv(out, reports);
    else
        write_text(out, reports, stats);
    return kExitOk;
}

struct CompareCell {
    std::string pattern;
    std::string sequence;
    std::string algorithm;
    std::optional<std::size_t> occ_count;
    double elapsed_ms = 0.0;
    std::optional<NodeEdgeStats> stats;
    std::string note;
};

std::string fixed3(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << v;
    return s.str();
}

void write_compare(std::ostream& out, const std::vector<CompareCell>& cells,
                   const std::string& output, const std::vector<std::string>& columns) {
    if (output == "json") {
        nlohmann::json doc;
        doc["schema"] = "gapmatch.compare/1";
        doc["cells"] = nlohmann::json::array();
        for (const auto& c : cells) {
            nlohmann::json j = {{"pattern", c.pattern},
                                {"sequence", c.sequence},
                                {"algorithm", c.algorithm},
                                {"elapsed_ms", c.elapsed_ms},
                                {"note", c.note}};
            j["occ_count"] = c.occ_count ? nlohmann::json(*c.occ_count) : nlohmann::json();
            if (c.stats)
                j["stats"] = {{"total_nodes", c.stats->total_nodes},
                              {"total_edges", c.stats->total_edges},
                              {"pruned_nodes", c.stats->pruned_nodes},
                              {"pruned_edges", c.stats->pruned_edges}};
            doc["cells"].push_back(std::move(j));
        }
        out << doc.dump(2) << '\n';
        return;
    }
    if (output == "csv") {
        out << "pattern,sequence,algorithm,occ_count,elapsed_ms,total_nodes,total_edges,"
               "pruned_nodes,pruned_edges,note\n";
        for (const auto& c : cells) {
            out << csv_field(c.pattern) << ',' << csv_field(c.sequence) << ',' << c.algorithm << ','
                << (c.occ_count ? std::to_string(*c.occ_count) : "") << ','
                << fixed3(c.elapsed_ms) << ',';
            if (c.stats)
                out << c.stats->total_nodes << ',' << c.stats->total_edges << ','
                    << c.stats->pruned_nodes << ',' << c.stats->pruned_edges;
            else
                out << ",,,";
            out << ',' << c.note << '\n';
        }
        return;
    }
    // Text: one row per (pattern, sequence), one column per algorithm.
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> head = {"pattern", "sequence"};
    head.insert(head.end(), columns.begin(), columns.end());
    table.push_back(head);
    for (std::size_t k = 0; k < cells.size(); k += columns.size()) {
        std::vector<std::string> row = {cells[k].pattern, cells[k].sequence};
        for (std::size_t a = 0; a < columns.size(); ++a) {
            const auto& c = cells[k + a];
            if (!c.occ_count)
                row.push_back(c.note.empty() ? "-" : c.note);
            else if (c.algorithm == "oracle")
                row.push_back(std::to_string(*c.occ_count));
            else
                row.push_back(std::to_string(*c.occ_count) + " (" + fixed3(c.elapsed_ms) + " ms)");
        }
        table.push_back(std::move(row));
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& row : table)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    for (const auto& row : table) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << std::left << std::setw(static_cast<int>(width[i] + 2)) << row[i];
        out << '\n';
    }
}

int cmd_compare(const InputOptions& in, const std::vector<std::string>& pattern_texts,
                const ThresholdOptions& t, const std::vector<std::string>& algorithms,
                bool oracle, std::size_t oracle_cap, unsigned jobs, const std::string& output,
                std::ostream& out) {
    for (const auto& a : algorithms)
        if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end())
            throw UsageError("unknown algorithm '" + a + "'");
    const auto prepared = prepare(in, pattern_texts, t);

    auto columns = algorithms;
    if (oracle)
        columns.push_back("oracle");
    std::vector<std::function<CompareCell()>> tasks;
    for (const auto& pattern : prepared.patterns) {
        for (const auto& seq : prepared.sequences) {
            for (const auto& name : columns) {
                tasks.push_back([&, name] {
                    CompareCell cell{format_pattern(pattern), seq.source_id, name, {}, 0.0, {}, {}};
                    if (name != "oracle") {
                        const auto r =
                            run_algorithm(name, seq, pattern, prepared.limits, prepared.metric);
                        cell.occ_count = r.occ_count();
                        cell.elapsed_ms = elapsed_ms(r);
                        if (name != "greedy" && name != "enumerate")
                            cell.stats = r.stats;
                        return cell;
                    }
                    const auto start = Clock::now();
                    try {
                        EnumerateOptions opts;
                        opts.max_occurrences = oracle_cap;
                        const auto all =
                            enumerate_all(seq, pattern, prepared.limits, prepared.metric, opts);
                        cell.occ_count = max_nonoverlapping(all).count;
                    } catch (const DataError&) {
                        cell.note = "skipped";
                    }
                    cell.elapsed_ms =
                        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
                    return cell;
                });
            }
        }
    }
    write_compare(out, run_jobs(tasks, jobs), output, columns);
    return kExitOk;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad integer '" + item + "' in --values");
        }
    }
    return values;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nonoverlapping gap-constrained approximate pattern matching"};
    app.name("gapmatch");
    app.require_subcommand(1);

    InputOptions in;
    ThresholdOptions t;
    std::string pattern;
    std::string algorithm = "netndp";
    std::string output = "text";
    bool stats = false;

    auto* match = app.add_subcommand("match", "Find occurrences of one pattern");
    add_input_flags(*match, in);
    add_threshold_flags(*match, t, true);
    match->add_option("--pattern,-p", pattern, "Pattern, e.g. b[0,1]a[0,2]b")->required();
    match->add_option("--algorithm,-a", algorithm, "Matching algorithm")
        ->check(CLI::IsMember(kAlgorithms))
        ->capture_default_str();
    match->add_option("--output,-o", output, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    match->add_flag("--stats", stats, "Include node/edge statistics in text output");

    std::vector<std::string> patterns;
    std::vector<std::string> algorithms = {"netndp", "netndp-nonp", "netlap", "greedy"};
    bool no_oracle = false;
    std::size_t oracle_cap = 50000;
    unsigned jobs = 1;
    auto* compare = app.add_subcommand("compare", "Run several algorithms on every input");
    add_input_flags(*compare, in);
    add_threshold_flags(*compare, t, true);
    compare->add_option("--pattern,-p", patterns, "Pattern (repeatable)")->required();
    compare->add_option("--algorithms", algorithms, "Algorithms to run")
        ->delimiter(',')
        ->capture_default_str();
    compare->add_flag("--no-oracle", no_oracle, "Skip the exhaustive maximum");
    compare->add_option("--oracle-cap", oracle_cap,
                        "Skip the oracle when an instance has more occurrences than this")
        ->capture_default_str();
    compare->add_option("--jobs,-j", jobs, "Worker threads")->capture_default_str();
    compare->add_option("--output,-o", output, "Table format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    BenchOptions bench;
    std::string sweep = "n";
    std::string values;
    std::string bench_alphabet;
    bool omit_timing = false;
    ThresholdOptions bench_t{1, 2, "ordinal"};
    auto* bench_cmd = app.add_subcommand(
        "bench", "Runtime sweeps over synthetic sequences drawn uniformly from the alphabet");
    bench_cmd->add_option("--sweep", sweep, "Swept parameter: n, m or W")
        ->check(CLI::IsMember({"n", "m", "W", "w"}))
        ->capture_default_str();
    bench_cmd->add_option("--values", values,
                          "Comma-separated sweep points (default n: 1000,2000,4000,8000; "
                          "m: 5,7,9; W: 7,8,10)");
    bench_cmd->add_option("--length", bench.length, "Sequence length for m and W sweeps")
        ->capture_default_str();
    bench_cmd->add_option("--repetitions,--reps", bench.repetitions, "Repetitions per point")
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
    bench_cmd->add_option("--pattern,-p", bench.pattern, "Pattern for the n sweep")
        ->capture_default_str();
    bench_cmd->add_option("--alphabet", bench_alphabet, "Symbols to draw from (default A-Z)");
    bench_cmd->add_flag("--omit-timing", omit_timing,
                        "Write 0 for elapsed time so output is byte-identical across runs");
    add_threshold_flags(*bench_cmd, bench_t, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (match->parsed())
            return cmd_match(in, pattern, t, algorithm, output, stats, out);
        if (compare->parsed())
            return cmd_compare(in, patterns, t, algorithms, !no_oracle, oracle_cap, jobs, output,
                               out);
        if (bench_cmd->parsed()) {
            try {
                bench.sweep = sweep_from_string(sweep);
                if (!values.empty())
                    bench.values = parse_int_list(values);
                bench.limits = {bench_t.delta, bench_t.gamma};
                bench.metric = metric_from_string(bench_t.metric);
                if (!bench_alphabet.empty())
                    bench.alphabet = Alphabet(bench_alphabet);
                const auto rows = run_sweep(bench);
                write_bench_csv(out, rows, omit_timing);
                std::vector<double> x, y;
                for (const auto& r : rows) {
                    x.push_back(r.value);
                    y.push_back(r.mean_elapsed_ms);
                }
                if (const auto rho = spearman(x, y))
                    err << "spearman(" << to_string(bench.sweep) << ", mean_elapsed_ms) = "
                        << fixed3(*rho) << '\n';
            } catch (const UsageError&) {
                throw;
            } catch (const Error& e) {
                throw UsageError(e.what());
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

} // namespace gapmatch::cli
