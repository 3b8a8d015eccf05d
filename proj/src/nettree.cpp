#include "gapmatch/nettree.hpp"

#include <algorithm>
#include <sstream>

#include "gapmatch/error.hpp"

namespace gapmatch {

namespace {

std::string node_name(NodeId id) {
    return "n_" + std::to_string(id.level) + "^" + std::to_string(id.pos);
}

} // namespace

LanTree LanTree::build(const RankedSequence& seq, const Pattern& pattern, Thresholds limits,
                       Metric metric, bool prune) {
    if (pattern.size() == 0 || pattern.ranks.size() != pattern.size())
        throw LogicError("pattern has no ranked symbols");
    if (limits.delta < 0 || limits.gamma < 0)
        throw ConstraintError("thresholds must be non-negative");

    LanTree tree;
    const auto m = static_cast<int>(pattern.size());
    const auto n = static_cast<int>(seq.size());
    tree.levels_.resize(static_cast<std::size_t>(m));
    tree.limits_ = limits;
    tree.sequence_length_ = n;
    tree.prune_ = prune;
    auto& stats = tree.stats_;

    const auto by_pos = [](const Node& node, int pos) { return node.pos < pos; };

    for (int i = 1; i <= n; ++i) {
        const auto rank = seq.ranks[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= m; ++j) {
            const Distance d = rank_distance(rank, pattern.ranks[static_cast<std::size_t>(j - 1)],
                                             metric);
            if (d > limits.delta)
                continue;
            auto& here = tree.levels_[static_cast<std::size_t>(j - 1)];
            if (j == 1) {
                if (prune && d > limits.gamma) {
                    ++stats.pruned_nodes;
                    continue;
                }
                here.push_back(Node{i, d, d, {}, {}, true});
                ++stats.total_nodes;
                continue;
            }

            // Parents r satisfy min <= i - r - 1 <= max.
            const Gap& gap = pattern.gaps[static_cast<std::size_t>(j - 2)];
            const int lo = i - 1 - gap.max;
            const int hi = i - 1 - gap.min;
            if (hi < 1)
                continue;
            auto& prev = tree.levels_[static_cast<std::size_t>(j - 2)];
            const auto first = std::lower_bound(prev.begin(), prev.end(), lo, by_pos);
            const auto last = std::lower_bound(first, prev.end(), hi + 1, by_pos);
            if (first == last)
                continue;  // lies on no full path

            Distance best = kInfiniteDistance;
            for (auto it = first; it != last; ++it)
                best = std::min(best, it->mrd);
            const Distance mrd = saturating_add(best, d);
            if (prune && mrd > limits.gamma) {
                ++stats.pruned_nodes;
                continue;
            }

            Node node{i, d, mrd, {}, {}, true};
            const auto self = static_cast<Index>(here.size());
            for (auto it = first; it != last; ++it) {
                if (prune && saturating_add(it->mrd, d) > limits.gamma) {
                    ++stats.pruned_edges;
                    continue;
                }
                node.parents.push_back(static_cast<Index>(it - prev.begin()));
                it->children.push_back(self);
                ++stats.total_edges;
            }
            here.push_back(std::move(node));
            ++stats.total_nodes;
        }
    }

    tree.pass_.resize(tree.levels_.size());
    for (std::size_t j = 0; j < tree.levels_.size(); ++j)
        tree.pass_[j].resize(tree.levels_[j].size());
    return tree;
}

bool LanTree::locate(NodeId id, Index& index) const {
    if (id.level < 1 || id.level > levels())
        return false;
    const auto& lvl = levels_[static_cast<std::size_t>(id.level - 1)];
    const auto it = std::lower_bound(lvl.begin(), lvl.end(), id.pos,
                                     [](const Node& node, int pos) { return node.pos < pos; });
    if (it == lvl.end() || it->pos != id.pos)
        return false;
    index = static_cast<Index>(it - lvl.begin());
    return true;
}

bool LanTree::contains(NodeId id) const {
    Index index = 0;
    return locate(id, index) && node(id.level, index).live;
}

const LanTree::Node& LanTree::at(NodeId id) const {
    Index index = 0;
    if (!locate(id, index))
        throw LogicError(node_name(id) + " does not exist");
    return node(id.level, index);
}

std::size_t LanTree::live_node_count() const noexcept {
    std::size_t count = 0;
    for (const auto& lvl : levels_)
        count += static_cast<std::size_t>(
            std::count_if(lvl.begin(), lvl.end(), [](const Node& n) { return n.live; }));
    return count;
}

void LanTree::erase(int level, Index index) {
    auto& target = levels_.at(static_cast<std::size_t>(level - 1)).at(index);
    if (!target.live)
        throw LogicError(node_name({level, target.pos}) + " is already deleted");
    target.live = false;
}

void LanTree::erase_occurrence(const Occurrence& occ) {
    if (occ.positions.size() != levels_.size())
        throw LogicError("occurrence length " + std::to_string(occ.positions.size()) +
                         " does not match tree depth " + std::to_string(levels_.size()));
    std::vector<Index> indices(levels_.size());
    for (int j = 1; j <= levels(); ++j) {
        const NodeId id{j, occ.positions[static_cast<std::size_t>(j - 1)]};
        if (!locate(id, indices[static_cast<std::size_t>(j - 1)]))
            throw LogicError(node_name(id) + " does not exist");
        if (!node(j, indices[static_cast<std::size_t>(j - 1)]).live)
            throw LogicError(node_name(id) + " is already deleted");
    }
    for (int j = 1; j <= levels(); ++j)
        levels_[static_cast<std::size_t>(j - 1)][indices[static_cast<std::size_t>(j - 1)]].live =
            false;
}

std::string LanTree::dump() const {
    std::ostringstream out;
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        out << 'L' << (j + 1) << ':';
        for (const auto& node : levels_[j]) {
            if (!node.live)
                continue;
            out << ' ' << node.pos << '(' << node.delta << ',';
            if (node.mrd >= kInfiniteDistance)
                out << "inf";
            else
                out << node.mrd;
            out << ')';
            if (j > 0) {
                out << '[';
                bool first = true;
                for (auto p : node.parents) {
                    const auto& parent = levels_[j - 1][p];
                    if (!parent.live)
                        continue;
                    if (!first)
                        out << ',';
                    out << parent.pos;
                    first = false;
                }
                out << ']';
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace gapmatch
