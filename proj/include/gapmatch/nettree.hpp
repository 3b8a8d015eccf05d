#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gapmatch/alphabet.hpp"
#include "gapmatch/occurrence.hpp"
#include "gapmatch/pattern.hpp"
#include "gapmatch/sequence.hpp"

namespace gapmatch {

/// Local (per symbol) and global (summed) distance bounds.
struct Thresholds {
    Distance delta = 0;
    Distance gamma = 0;
};

/// Node n_j^i: pattern level j and sequence position i, both 1-based.
struct NodeId {
    int level = 0;
    int pos = 0;

    friend bool operator==(const NodeId&, const NodeId&) = default;
};

/// Structural sizes recorded while building a tree.
struct NodeEdgeStats {
    std::size_t total_nodes = 0;   ///< nodes materialised (after pruning)
    std::size_t total_edges = 0;   ///< parent-child links created
    std::size_t pruned_nodes = 0;  ///< nodes dropped because their MRD exceeded gamma
    std::size_t pruned_edges = 0;  ///< gap-eligible links dropped because parent MRD + delta exceeded gamma

    friend bool operator==(const NodeEdgeStats&, const NodeEdgeStats&) = default;
};

/// Leveled multi-root, multi-parent graph whose full paths encode occurrences.
///
/// Level j holds one node per sequence position i whose symbol is within delta of p_j and
/// that has at least one gap-eligible parent on level j-1. Each node stores its own
/// distance and its minimal root distance (MRD), the smallest summed distance over all of
/// its root paths. Nodes within a level are kept in ascending position order, and every
/// parent/child list is sorted the same way.
///
/// Deleted nodes are tombstoned: they stay in the level arrays and edge lists with
/// `live == false`. Traversals must skip them.
///
/// Besides the build-time MRD, each node carries a per-pass MRD used by the search layer.
/// A pass is opened with begin_pass(); values from older passes read as infinite.
class LanTree {
public:
    using Index = std::uint32_t;

    struct Node {
        int pos = 0;
        Distance delta = 0;
        Distance mrd = 0;
        std::vector<Index> parents;
        std::vector<Index> children;
        bool live = true;
    };

    /// Builds the tree left to right over the sequence, top-down over levels.
    ///
    /// With `prune`, nodes whose MRD exceeds gamma are dropped, and links whose
    /// parent MRD plus child distance exceeds gamma are never created. Without it every
    /// locally matching node with an eligible parent is kept, with all gap-eligible links.
    static LanTree build(const RankedSequence& seq, const Pattern& pattern, Thresholds limits,
                         Metric metric, bool prune);

    /// Pattern length m.
    int levels() const noexcept { return static_cast<int>(levels_.size()); }
    int sequence_length() const noexcept { return sequence_length_; }
    bool pruned() const noexcept { return prune_; }
    Thresholds thresholds() const noexcept { return limits_; }

    /// Nodes on level `level` (1-based), live and deleted, ascending by position.
    std::span<const Node> level(int level) const { return levels_.at(level - 1); }
    const Node& node(int level, Index index) const { return levels_[level - 1][index]; }

    /// Index of the node at `id`, live or not. Returns false if it was never created.
    bool locate(NodeId id, Index& index) const;
    /// True iff the node exists and is live.
    bool contains(NodeId id) const;
    /// The node at `id`; throws LogicError if it was never created.
    const Node& at(NodeId id) const;

    std::size_t live_node_count() const noexcept;

    NodeEdgeStats stats() const noexcept { return stats_; }

    /// Tombstones one node. Throws LogicError if it is already deleted.
    void erase(int level, Index index);

    /// Removes exactly the m nodes of `occ`, one per level, and nothing else.
    /// Throws LogicError (before touching the tree) if any of them is missing or deleted.
    void erase_occurrence(const Occurrence& occ);

    /// Opens a new search pass; all per-pass MRDs read as infinite afterwards.
    void begin_pass() noexcept { ++epoch_; }
    Distance pass_mrd(int level, Index index) const noexcept {
        const auto& slot = pass_[level - 1][index];
        return slot.epoch == epoch_ ? slot.mrd : kInfiniteDistance;
    }
    /// pass_mrd = min(pass_mrd, value) for the current pass.
    void relax_pass_mrd(int level, Index index, Distance value) noexcept {
        auto& slot = pass_[level - 1][index];
        if (slot.epoch != epoch_) {
            slot.epoch = epoch_;
            slot.mrd = value;
        } else if (value < slot.mrd) {
            slot.mrd = value;
        }
    }
    bool pass_fresh(int level, Index index) const noexcept {
        return pass_[level - 1][index].epoch == epoch_;
    }

    /// Text rendering, one line per level:
    ///   `L<j>: <pos>(<delta>,<mrd>)[<parent positions>] ...`
    /// Deleted nodes are omitted. Infinite MRDs print as `inf`.
    std::string dump() const;

private:
    struct PassSlot {
        std::uint64_t epoch = 0;
        Distance mrd = kInfiniteDistance;
    };

    std::vector<std::vector<Node>> levels_;
    std::vector<std::vector<PassSlot>> pass_;
    std::uint64_t epoch_ = 1;
    NodeEdgeStats stats_;
    Thresholds limits_;
    int sequence_length_ = 0;
    bool prune_ = true;
};

} // namespace gapmatch
