#include "gapmatch/matcher.hpp"

#include <algorithm>
#include <limits>

#include "gapmatch/error.hpp"

namespace gapmatch {

using Index = LanTree::Index;
using Clock = std::chrono::steady_clock;

Distance DeviationProfile::max_ordinal() const noexcept {
    Distance worst = 0;
    for (auto d : ordinal)
        worst = std::max(worst, d);
    return worst;
}

std::vector<Occurrence> MatchReport::sorted_occurrences() const {
    auto out = occurrences;
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<NodeId> reach_leaf(LanTree& tree, NodeId root, Distance gamma) {
    Index root_index = 0;
    if (root.level != 1 || !tree.locate(root, root_index) || !tree.node(1, root_index).live)
        throw LogicError("reach_leaf needs a live level-1 root");

    tree.begin_pass();
    const int m = tree.levels();
    const auto& r = tree.node(1, root_index);
    if (r.delta > gamma)
        return std::nullopt;
    tree.relax_pass_mrd(1, root_index, r.delta);

    // [lal, ral] bounds the indices reached on the current level.
    Index lal = root_index;
    Index ral = root_index;
    for (int level = 1; level < m; ++level) {
        Index next_lal = std::numeric_limits<Index>::max();
        Index next_ral = 0;
        bool within = false;
        for (Index idx = lal; idx <= ral; ++idx) {
            if (!tree.pass_fresh(level, idx))
                continue;
            const auto& node = tree.node(level, idx);
            const Distance here = tree.pass_mrd(level, idx);
            if (!node.live || here > gamma)
                continue;
            for (Index c : node.children) {
                const auto& child = tree.node(level + 1, c);
                if (!child.live)
                    continue;
                const Distance value = saturating_add(here, child.delta);
                tree.relax_pass_mrd(level + 1, c, value);
                next_lal = std::min(next_lal, c);
                next_ral = std::max(next_ral, c);
                within = within || value <= gamma;
            }
        }
        if (!within)
            return std::nullopt;
        lal = next_lal;
        ral = next_ral;
    }

    for (Index idx = ral + 1; idx-- > lal;) {
        if (tree.pass_fresh(m, idx) && tree.node(m, idx).live && tree.pass_mrd(m, idx) <= gamma)
            return NodeId{m, tree.node(m, idx).pos};
    }
    return std::nullopt;
}

RightmostResult rightmost_occurrence(const LanTree& tree, NodeId root, NodeId leaf,
                                     Distance gamma) {
    const int m = tree.levels();
    Index leaf_index = 0;
    if (leaf.level != m || !tree.locate(leaf, leaf_index) || !tree.node(m, leaf_index).live)
        throw LogicError("rightmost_occurrence needs a live absolute leaf");
    if (root.level != 1)
        throw LogicError("rightmost_occurrence needs a level-1 root");
    if (!tree.pass_fresh(m, leaf_index) || tree.pass_mrd(m, leaf_index) > gamma)
        throw LogicError("leaf was not reached within gamma in the current pass");

    struct Frame {
        int level;
        Index index;
        Distance budget;     // distance still allowed above this node
        std::size_t cursor;  // parents[cursor..] already tried
    };

    RightmostResult result;
    std::vector<Frame> stack;
    stack.reserve(static_cast<std::size_t>(m));
    const auto& leaf_node = tree.node(m, leaf_index);
    stack.push_back({m, leaf_index, gamma - leaf_node.delta, leaf_node.parents.size()});

    while (!stack.empty()) {
        const Frame top = stack.back();
        const auto& node = tree.node(top.level, top.index);
        if (top.level == 1) {
            if (node.pos == root.pos) {
                result.occurrence.positions.resize(static_cast<std::size_t>(m));
                Distance total = 0;
                for (const auto& f : stack) {
                    const auto& n = tree.node(f.level, f.index);
                    result.occurrence.positions[static_cast<std::size_t>(f.level - 1)] = n.pos;
                    total += n.delta;
                }
                result.occurrence.gdist = total;
                return result;
            }
            stack.pop_back();
            ++result.retries;
            continue;
        }

        bool advanced = false;
        std::size_t cursor = top.cursor;
        while (cursor > 0) {
            --cursor;
            const Index p = node.parents[cursor];
            const int up = top.level - 1;
            if (!tree.pass_fresh(up, p) || !tree.node(up, p).live)
                continue;
            if (tree.pass_mrd(up, p) <= top.budget) {
                stack.back().cursor = cursor;
                const auto& parent = tree.node(up, p);
                stack.push_back({up, p, top.budget - parent.delta, parent.parents.size()});
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            stack.pop_back();
            if (!stack.empty())
                ++result.retries;
        }
    }
    throw LogicError("no root path within gamma from the leaf; per-pass MRDs are stale");
}

MatchReport net_ndp(const RankedSequence& seq, const Pattern& pattern, Thresholds limits,
                    Metric metric, bool prune) {
    MatchReport report;
    report.algorithm = prune ? "netndp" : "netndp-nonp";
    const auto start = Clock::now();

    auto tree = LanTree::build(seq, pattern, limits, metric, prune);
    const auto roots = tree.level(1).size();
    for (std::size_t k = roots; k-- > 0;) {
        const auto& root_node = tree.node(1, static_cast<Index>(k));
        if (!root_node.live)
            continue;
        const NodeId root{1, root_node.pos};
        const auto leaf = reach_leaf(tree, root, limits.gamma);
        if (!leaf)
            continue;
        auto found = rightmost_occurrence(tree, root, *leaf, limits.gamma);
        report.parent_retries += found.retries;
        tree.erase_occurrence(found.occurrence);
        report.occurrences.push_back(std::move(found.occurrence));
    }

    report.elapsed = Clock::now() - start;
    report.stats = tree.stats();
    attach_profiles(report, seq, pattern, limits, metric, prune);
    return report;
}

Distance occurrence_distance(const RankedSequence& seq, const Pattern& pattern,
                             const std::vector<int>& positions, Metric metric) {
    Distance total = 0;
    for (std::size_t j = 0; j < positions.size() && j < pattern.size(); ++j)
        total = saturating_add(
            total, rank_distance(seq.ranks[static_cast<std::size_t>(positions[j] - 1)],
                                 pattern.ranks[j], metric));
    return total;
}

bool verify_occurrence(const RankedSequence& seq, const Pattern& pattern,
                       const Occurrence& occ, Thresholds limits, Metric metric) {
    const auto& l = occ.positions;
    if (l.size() != pattern.size() || l.empty())
        return false;
    const auto n = static_cast<int>(seq.size());
    for (int pos : l)
        if (pos < 1 || pos > n)
            return false;
    for (std::size_t j = 0; j + 1 < l.size(); ++j) {
        const int skipped = l[j + 1] - l[j] - 1;
        if (skipped < pattern.gaps[j].min || skipped > pattern.gaps[j].max)
            return false;
    }
    Distance total = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        const Distance d =
            rank_distance(seq.ranks[static_cast<std::size_t>(l[j] - 1)], pattern.ranks[j], metric);
        if (d > limits.delta)
            return false;
        total = saturating_add(total, d);
    }
    return total <= limits.gamma;
}

DeviationProfile deviation_profile(const RankedSequence& seq, const Pattern& pattern,
                                   const Occurrence& occ, Metric metric) {
    DeviationProfile profile;
    profile.metric.reserve(occ.positions.size());
    profile.ordinal.reserve(occ.positions.size());
    for (std::size_t j = 0; j < occ.positions.size(); ++j) {
        const auto r = seq.ranks[static_cast<std::size_t>(occ.positions[j] - 1)];
        profile.metric.push_back(rank_distance(r, pattern.ranks[j], metric));
        profile.ordinal.push_back(rank_distance(r, pattern.ranks[j], Metric::ordinal));
    }
    return profile;
}

void attach_profiles(MatchReport& report, const RankedSequence& seq, const Pattern& pattern,
                     Thresholds limits, Metric metric, bool prune) {
    report.params = MatchParams{format_pattern(pattern), limits, metric, prune};
    report.profiles.clear();
    report.profiles.reserve(report.occurrences.size());
    for (const auto& occ : report.occurrences)
        report.profiles.push_back(deviation_profile(seq, pattern, occ, metric));
}

} // namespace gapmatch
