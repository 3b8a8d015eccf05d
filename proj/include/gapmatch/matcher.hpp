#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gapmatch/nettree.hpp"
#include "gapmatch/occurrence.hpp"
#include "gapmatch/pattern.hpp"
#include "gapmatch/sequence.hpp"

namespace gapmatch {

struct MatchParams {
    std::string pattern;  ///< canonical pattern text
    Thresholds limits;
    Metric metric = Metric::ordinal;
    bool prune = true;
};

/// Per-position distances of one occurrence against the pattern.
struct DeviationProfile {
    std::vector<Distance> metric;   ///< under the metric used for matching
    std::vector<Distance> ordinal;  ///< always |rank difference|, whatever the metric

    Distance max_ordinal() const noexcept;
};

struct MatchReport {
    std::string algorithm;
    MatchParams params;
    std::vector<Occurrence> occurrences;    ///< discovery order
    std::vector<DeviationProfile> profiles; ///< parallel to `occurrences`
    NodeEdgeStats stats;
    std::chrono::nanoseconds elapsed{0};
    /// Parent choices that had to be undone while extracting occurrences.
    std::size_t parent_retries = 0;

    std::size_t occ_count() const noexcept { return occurrences.size(); }
    /// Occurrences ordered by position vector.
    std::vector<Occurrence> sorted_occurrences() const;
};

/// Recomputes per-pass MRDs over the sub-tree reachable from `root` (a live level-1 node)
/// and returns the rightmost absolute leaf whose recomputed MRD is within gamma.
///
/// Opens a new pass on `tree`. Nodes outside the sub-tree read as infinite afterwards.
std::optional<NodeId> reach_leaf(LanTree& tree, NodeId root, Distance gamma);

struct RightmostResult {
    Occurrence occurrence;
    std::size_t retries = 0;
};

/// Walks from `leaf` to `root` picking, with remaining budget d, the rightmost live parent
/// whose per-pass MRD is at most d - delta(current).
///
/// Requires the per-pass MRDs written by the reach_leaf call that returned `leaf`. A dead
/// end would need backtracking; the walk does backtrack in that case and counts each undone
/// choice in `retries`, which stays zero whenever the pass MRDs are fresh. Throws LogicError
/// if no path within gamma exists (stale MRDs).
RightmostResult rightmost_occurrence(const LanTree& tree, NodeId root, NodeId leaf,
                                     Distance gamma);

/// Builds the tree, then sweeps roots right to left. Each root that reaches an absolute leaf
/// within gamma yields its rightmost occurrence, which is removed from the tree.
MatchReport net_ndp(const RankedSequence& seq, const Pattern& pattern, Thresholds limits,
                    Metric metric, bool prune = true);

/// Rightmost-leaf search without per-root prejudging: takes the rightmost live absolute leaf,
/// descends by rightmost parent with backtracking on the accumulated distance, deletes the
/// occurrence and cascades away nodes left without parents or children.
MatchReport netlap_variant(const RankedSequence& seq, const Pattern& pattern,
                           Thresholds limits, Metric metric);

/// Left-to-right scan taking, for each unused start, the leftmost complete occurrence over
/// unused positions. No sequence position is ever used twice.
MatchReport greedy_leftmost(const RankedSequence& seq, const Pattern& pattern,
                            Thresholds limits, Metric metric);

/// True iff `occ` satisfies the gap, local and global constraints. `occ.gdist` is ignored.
bool verify_occurrence(const RankedSequence& seq, const Pattern& pattern,
                       const Occurrence& occ, Thresholds limits, Metric metric);

/// Summed metric distance of the symbols at `positions` against the pattern.
Distance occurrence_distance(const RankedSequence& seq, const Pattern& pattern,
                             const std::vector<int>& positions, Metric metric);

DeviationProfile deviation_profile(const RankedSequence& seq, const Pattern& pattern,
                                   const Occurrence& occ, Metric metric);

/// Fills `report.params` and one deviation profile per occurrence.
void attach_profiles(MatchReport& report, const RankedSequence& seq, const Pattern& pattern,
                     Thresholds limits, Metric metric, bool prune);

} // namespace gapmatch
