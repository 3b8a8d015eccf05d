#include <algorithm>

#include "gapmatch/error.hpp"
#include "gapmatch/matcher.hpp"

namespace gapmatch {

namespace {

using Index = LanTree::Index;
using Clock = std::chrono::steady_clock;

bool has_live_parent(const LanTree& tree, int level, const LanTree::Node& node) {
    return std::any_of(node.parents.begin(), node.parents.end(),
                       [&](Index p) { return tree.node(level - 1, p).live; });
}

bool has_live_child(const LanTree& tree, int level, const LanTree::Node& node) {
    return std::any_of(node.children.begin(), node.children.end(),
                       [&](Index c) { return tree.node(level + 1, c).live; });
}

// Deletes `seeds` and then every node left without a live parent (levels >= 2) or without a
// live child (levels < m), transitively.
void erase_with_cascade(LanTree& tree, std::vector<std::pair<int, Index>> seeds) {
    const int m = tree.levels();
    for (auto [level, idx] : seeds)
        tree.erase(level, idx);
    std::vector<std::pair<int, Index>> work = std::move(seeds);
    while (!work.empty()) {
        const auto [level, idx] = work.back();
        work.pop_back();
        const auto& node = tree.node(level, idx);
        if (level < m) {
            for (Index c : node.children) {
                const auto& child = tree.node(level + 1, c);
                if (child.live && !has_live_parent(tree, level + 1, child)) {
                    tree.erase(level + 1, c);
                    work.emplace_back(level + 1, c);
                }
            }
        }
        if (level > 1) {
            for (Index p : node.parents) {
                const auto& parent = tree.node(level - 1, p);
                if (parent.live && !has_live_child(tree, level - 1, parent)) {
                    tree.erase(level - 1, p);
                    work.emplace_back(level - 1, p);
                }
            }
        }
    }
}

// Rightmost-parent descent from a leaf with backtracking on the accumulated distance.
// On success fills `path` with (level, index) from level 1 to m.
bool descend_from_leaf(const LanTree& tree, Index leaf, Distance gamma,
                       std::vector<std::pair<int, Index>>& path, std::size_t& retries) {
    struct Frame {
        int level;
        Index index;
        Distance spent;  // distance from the leaf up to and including this node
        std::size_t cursor;
    };
    const int m = tree.levels();
    const auto& leaf_node = tree.node(m, leaf);
    if (leaf_node.delta > gamma)
        return false;
    std::vector<Frame> stack{{m, leaf, leaf_node.delta, leaf_node.parents.size()}};
    while (!stack.empty()) {
        const Frame top = stack.back();
        if (top.level == 1) {
            path.clear();
            for (auto it = stack.rbegin(); it != stack.rend(); ++it)
                path.emplace_back(it->level, it->index);
            return true;
        }
        const auto& node = tree.node(top.level, top.index);
        bool advanced = false;
        std::size_t cursor = top.cursor;
        while (cursor > 0) {
            --cursor;
            const Index p = node.parents[cursor];
            const auto& parent = tree.node(top.level - 1, p);
            if (!parent.live || saturating_add(top.spent, parent.delta) > gamma)
                continue;
            stack.back().cursor = cursor;
            stack.push_back({top.level - 1, p, top.spent + parent.delta, parent.parents.size()});
            advanced = true;
            break;
        }
        if (!advanced) {
            stack.pop_back();
            if (!stack.empty())
                ++retries;
        }
    }
    return false;
}

} // namespace

MatchReport netlap_variant(const RankedSequence& seq, const Pattern& pattern,
                           Thresholds limits, Metric metric) {
    MatchReport report;
    report.algorithm = "netlap";
    const auto start = Clock::now();

    auto tree = LanTree::build(seq, pattern, limits, metric, true);
    const int m = tree.levels();
    const auto leaves = tree.level(m).size();
    std::vector<std::pair<int, Index>> path;
    // A leaf that fails once keeps failing: deletions only remove paths.
    for (std::size_t k = leaves; k-- > 0;) {
        if (!tree.node(m, static_cast<Index>(k)).live)
            continue;
        if (!descend_from_leaf(tree, static_cast<Index>(k), limits.gamma, path,
                               report.parent_retries))
            continue;
        Occurrence occ;
        for (auto [level, idx] : path) {
            const auto& node = tree.node(level, idx);
            occ.positions.push_back(node.pos);
            occ.gdist += node.delta;
        }
        erase_with_cascade(tree, path);
        report.occurrences.push_back(std::move(occ));
    }

    report.elapsed = Clock::now() - start;
    report.stats = tree.stats();
    attach_profiles(report, seq, pattern, limits, metric, true);
    return report;
}

MatchReport greedy_leftmost(const RankedSequence& seq, const Pattern& pattern,
                            Thresholds limits, Metric metric) {
    MatchReport report;
    report.algorithm = "greedy";
    const auto start = Clock::now();

    const auto n = static_cast<int>(seq.size());
    const auto m = pattern.size();
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    const auto dist = [&](int pos, std::size_t j) {
        return rank_distance(seq.ranks[static_cast<std::size_t>(pos - 1)], pattern.ranks[j],
                             metric);
    };

    struct Frame {
        int pos;
        Distance spent;
        int next;  // next candidate position for the following level
    };
    std::vector<Frame> stack;
    for (int first = 1; first <= n; ++first) {
        if (used[static_cast<std::size_t>(first)])
            continue;
        const Distance d0 = dist(first, 0);
        if (d0 > limits.delta || d0 > limits.gamma)
            continue;
        stack.clear();
        stack.push_back({first, d0, first + 1 + (m > 1 ? pattern.gaps[0].min : 0)});
        while (!stack.empty() && stack.size() < m) {
            auto& top = stack.back();
            const auto& gap = pattern.gaps[stack.size() - 1];
            const int last = std::min(n, top.pos + 1 + gap.max);
            bool advanced = false;
            while (top.next <= last) {
                const int cand = top.next++;
                if (used[static_cast<std::size_t>(cand)])
                    continue;
                const Distance d = dist(cand, stack.size());
                if (d > limits.delta || saturating_add(top.spent, d) > limits.gamma)
                    continue;
                const int next_min =
                    stack.size() + 1 < m ? cand + 1 + pattern.gaps[stack.size()].min : 0;
                stack.push_back({cand, top.spent + d, next_min});
                advanced = true;
                break;
            }
            if (!advanced)
                stack.pop_back();
        }
        if (stack.size() != m)
            continue;
        Occurrence occ;
        for (const auto& f : stack) {
            occ.positions.push_back(f.pos);
            used[static_cast<std::size_t>(f.pos)] = 1;
        }
        occ.gdist = stack.back().spent;
        report.occurrences.push_back(std::move(occ));
    }

    report.elapsed = Clock::now() - start;
    attach_profiles(report, seq, pattern, limits, metric, false);
    return report;
}

} // namespace gapmatch
