#include "gapmatch/cli/bench.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>

#include "gapmatch/cli/report.hpp"
#include "gapmatch/error.hpp"
#include "gapmatch/matcher.hpp"

namespace gapmatch::cli {

SweepKind sweep_from_string(const std::string& name) {
    if (name == "n")
        return SweepKind::n;
    if (name == "m")
        return SweepKind::m;
    if (name == "W" || name == "w")
        return SweepKind::W;
    throw ConstraintError("unknown sweep '" + name + "' (expected n, m or W)");
}

std::string to_string(SweepKind kind) {
    switch (kind) {
    case SweepKind::n: return "n";
    case SweepKind::m: return "m";
    case SweepKind::W: return "W";
    }
    return "?";
}

namespace {

std::vector<int> default_values(SweepKind kind) {
    switch (kind) {
    case SweepKind::n: return {1000, 2000, 4000, 8000};
    case SweepKind::m: return {5, 7, 9};
    case SweepKind::W: return {7, 8, 10};
    }
    return {};
}

} // namespace

std::string sweep_pattern(const BenchOptions& options, int value) {
    switch (options.sweep) {
    case SweepKind::n:
        return options.pattern;
    case SweepKind::m: {
        if (value < 1)
            throw ConstraintError("pattern length must be positive");
        static constexpr std::string_view cycle = "ELS";
        std::string out;
        for (int j = 0; j < value; ++j) {
            if (j > 0)
                out += "[0,9]";
            out += cycle[static_cast<std::size_t>(j) % cycle.size()];
        }
        return out;
    }
    case SweepKind::W: {
        if (value < 1)
            throw ConstraintError("maximum gap must be at least 1");
        static constexpr std::string_view shape = "QELELN";
        std::string out;
        for (std::size_t j = 0; j < shape.size(); ++j) {
            if (j > 0)
                out += "[1," + std::to_string(value) + "]";
            out += shape[j];
        }
        return out;
    }
    }
    return {};
}

std::string random_sequence(const Alphabet& alphabet, std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string out(length, '\0');
    for (auto& c : out)
        c = alphabet.symbols()[pick(rng)];
    return out;
}

std::vector<BenchRow> run_sweep(const BenchOptions& options) {
    const auto values = options.values.empty() ? default_values(options.sweep) : options.values;
    if (options.repetitions < 1)
        throw ConstraintError("repetitions must be at least 1");
    int length = options.length;
    if (options.sweep == SweepKind::n)
        length = *std::max_element(values.begin(), values.end());
    if (length < 1)
        throw ConstraintError("sequence length must be positive");

    std::vector<Pattern> patterns;
    for (int v : values)
        patterns.push_back(parse_pattern(sweep_pattern(options, v), options.alphabet));

    std::vector<BenchRow> rows(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        rows[k].sweep = options.sweep;
        rows[k].value = values[k];
        rows[k].pattern = format_pattern(patterns[k]);
        rows[k].length = options.sweep == SweepKind::n ? values[k] : length;
        rows[k].repetitions = options.repetitions;
    }

    for (int rep = 0; rep < options.repetitions; ++rep) {
        const auto text = random_sequence(options.alphabet, static_cast<std::size_t>(length),
                                          options.seed + static_cast<std::uint64_t>(rep));
        const auto full = rank_sequence(text, options.alphabet);
        // Rotate the run order each repetition so no sweep point is always measured first.
        for (std::size_t step = 0; step < values.size(); ++step) {
            const auto k = (step + static_cast<std::size_t>(rep)) % values.size();
            RankedSequence seq;
            if (options.sweep == SweepKind::n) {
                if (values[k] < 1)
                    throw ConstraintError("sequence length must be positive");
                const auto n = static_cast<std::size_t>(values[k]);
                seq = rank_sequence(std::string_view(text).substr(0, n), options.alphabet);
            } else {
                seq = full;
            }
            const auto report = net_ndp(seq, patterns[k], options.limits, options.metric, true);
            auto& row = rows[k];
            row.mean_elapsed_ms += std::chrono::duration<double, std::milli>(report.elapsed).count();
            row.mean_occ_count += static_cast<double>(report.occ_count());
            row.mean_total_nodes += static_cast<double>(report.stats.total_nodes);
            row.mean_total_edges += static_cast<double>(report.stats.total_edges);
            row.mean_pruned_nodes += static_cast<double>(report.stats.pruned_nodes);
            row.mean_pruned_edges += static_cast<double>(report.stats.pruned_edges);
        }
    }

    const double reps = options.repetitions;
    for (auto& row : rows) {
        row.mean_elapsed_ms /= reps;
        row.mean_occ_count /= reps;
        row.mean_total_nodes /= reps;
        row.mean_total_edges /= reps;
        row.mean_pruned_nodes /= reps;
        row.mean_pruned_edges /= reps;
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool omit_timing) {
    out << "sweep,value,pattern,length,repetitions,mean_elapsed_ms,mean_occ_count,"
           "mean_total_nodes,mean_total_edges,mean_pruned_nodes,mean_pruned_edges\n";
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::fixed << std::setprecision(3);
    for (const auto& r : rows) {
        out << to_string(r.sweep) << ',' << r.value << ',' << csv_field(r.pattern) << ',' << r.length << ','
            << r.repetitions << ',' << (omit_timing ? 0.0 : r.mean_elapsed_ms) << ','
            << r.mean_occ_count << ',' << r.mean_total_nodes << ',' << r.mean_total_edges << ','
            << r.mean_pruned_nodes << ',' << r.mean_pruned_edges << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]])
            ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

} // namespace

std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        return std::nullopt;
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0 || syy == 0)
        return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

} // namespace gapmatch::cli
