#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gapmatch/alphabet.hpp"
#include "gapmatch/nettree.hpp"

namespace gapmatch::cli {

enum class SweepKind { n, m, W };

SweepKind sweep_from_string(const std::string& name);
std::string to_string(SweepKind kind);

struct BenchOptions {
    SweepKind sweep = SweepKind::n;
    /// Swept values; defaults per sweep when empty (n: 1000..8000, m: 5,7,9, W: 7,8,10).
    std::vector<int> values;
    /// Sequence length for m and W sweeps.
    int length = 10000;
    int repetitions = 5;
    std::uint64_t seed = 1;
    Thresholds limits{1, 2};
    Metric metric = Metric::ordinal;
    Alphabet alphabet = Alphabet::uppercase();
    /// Pattern for the n sweep.
    std::string pattern = "E[0,9]L[0,9]S[0,9]E[0,9]L";
};

struct BenchRow {
    SweepKind sweep{};
    int value = 0;
    std::string pattern;
    int length = 0;
    int repetitions = 0;
    double mean_elapsed_ms = 0.0;
    double mean_occ_count = 0.0;
    double mean_total_nodes = 0.0;
    double mean_total_edges = 0.0;
    double mean_pruned_nodes = 0.0;
    double mean_pruned_edges = 0.0;
};

/// Pattern used at a sweep point: the n-sweep pattern, "ELS" repeated to length m with
/// [0,9] gaps, or QELELN with [1,W] gaps.
std::string sweep_pattern(const BenchOptions& options, int value);

/// Uniform random sequence over `alphabet`, deterministic for a seed.
std::string random_sequence(const Alphabet& alphabet, std::size_t length, std::uint64_t seed);

/// Runs netndp at every sweep point. Repetition r uses one random sequence (seeded from
/// seed + r); the n sweep takes prefixes of it, the other sweeps use it whole. Within a
/// repetition the sweep points run in an order rotated by r.
std::vector<BenchRow> run_sweep(const BenchOptions& options);

/// CSV with a fixed header. With `omit_timing` the elapsed column is written as 0 so the
/// output is byte-identical across runs.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool omit_timing);

/// Spearman rank correlation with average ranks for ties. nullopt if undefined.
std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y);

} // namespace gapmatch::cli
