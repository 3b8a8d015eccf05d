#include <doctest.h>

#include "gapmatch/error.hpp"
#include "gapmatch/matcher.hpp"
#include "gapmatch/oracle.hpp"
#include "support/random_instances.hpp"

using namespace gapmatch;

namespace {

const Alphabet lower = Alphabet::lowercase();

struct Worked {
    RankedSequence seq = rank_sequence("baabcbbab", lower);
    Pattern pattern = parse_pattern("b[0,1]a[0,2]b[0,2]b", lower);
    Thresholds limits{1, 1};
};

std::vector<std::vector<int>> positions(const std::vector<Occurrence>& occs) {
    std::vector<std::vector<int>> out;
    for (const auto& o : occs)
        out.push_back(o.positions);
    return out;
}

Distance pass_value(const LanTree& t, NodeId id) {
    LanTree::Index idx = 0;
    REQUIRE(t.locate(id, idx));
    return t.pass_mrd(id.level, idx);
}

} // namespace

TEST_CASE("roots right of position 4 cannot reach a leaf") {
    Worked w;
    auto t = LanTree::build(w.seq, w.pattern, w.limits, Metric::ordinal, true);
    for (int root = 9; root >= 5; --root) {
        CAPTURE(root);
        CHECK_FALSE(reach_leaf(t, {1, root}, 1).has_value());
    }
}

TEST_CASE("root 4 reaches leaf 9 and yields <4,6,7,9>") {
    Worked w;
    auto t = LanTree::build(w.seq, w.pattern, w.limits, Metric::ordinal, true);
    const auto leaf = reach_leaf(t, {1, 4}, 1);
    REQUIRE(leaf.has_value());
    CHECK(*leaf == NodeId{4, 9});
    // Within root 4's sub-tree the best path to leaf 9 is 4,6,7,9 with distance 1; the
    // stored build-time value 0 comes from root 6, which is outside this sub-tree.
    CHECK(pass_value(t, {4, 9}) == 1);
    CHECK(t.at({4, 9}).mrd == 0);
    CHECK(pass_value(t, {1, 1}) == kInfiniteDistance);

    const auto r = rightmost_occurrence(t, {1, 4}, *leaf, 1);
    CHECK(r.occurrence.positions == std::vector<int>{4, 6, 7, 9});
    CHECK(r.occurrence.gdist == 1);
    CHECK(r.retries == 0);
}

TEST_CASE("after removing <4,6,7,9> root 2 reaches leaf 7 and picks node 6 on level 3") {
    Worked w;
    auto t = LanTree::build(w.seq, w.pattern, w.limits, Metric::ordinal, true);
    t.erase_occurrence({{4, 6, 7, 9}, 1});
    CHECK_FALSE(reach_leaf(t, {1, 3}, 1).has_value());
    const auto leaf = reach_leaf(t, {1, 2}, 1);
    REQUIRE(leaf.has_value());
    CHECK(*leaf == NodeId{4, 7});
    CHECK(pass_value(t, {4, 8}) == 2);
    CHECK(pass_value(t, {3, 6}) == 1);
    const auto r = rightmost_occurrence(t, {1, 2}, *leaf, 1);
    CHECK(r.occurrence.positions == std::vector<int>{2, 3, 6, 7});
    CHECK(r.occurrence.gdist == 1);
    CHECK(r.retries == 0);
}

TEST_CASE("stale pass values are detected") {
    Worked w;
    auto t = LanTree::build(w.seq, w.pattern, w.limits, Metric::ordinal, true);
    REQUIRE(reach_leaf(t, {1, 4}, 1).has_value());
    t.begin_pass();
    CHECK_THROWS_AS(rightmost_occurrence(t, {1, 4}, {4, 9}, 1), LogicError);
}

TEST_CASE("single-level pattern: the leaf is the root") {
    const auto seq = rank_sequence("abcab", lower);
    const auto p = parse_pattern("b", lower);
    auto t = LanTree::build(seq, p, {1, 1}, Metric::ordinal, true);
    const auto leaf = reach_leaf(t, {1, 3}, 1);
    REQUIRE(leaf.has_value());
    CHECK(*leaf == NodeId{1, 3});
    const auto r = rightmost_occurrence(t, {1, 3}, *leaf, 1);
    CHECK(r.occurrence.positions == std::vector<int>{3});
    CHECK(r.occurrence.gdist == 1);

    // All roots within min(delta, gamma), right to left.
    const auto report = net_ndp(seq, p, {1, 0}, Metric::ordinal);
    CHECK(positions(report.occurrences) == std::vector<std::vector<int>>{{5}, {2}});
    const auto wide = net_ndp(seq, p, {1, 5}, Metric::ordinal);
    CHECK(wide.occ_count() == 5);
}

TEST_CASE("net_ndp on baabcbbab finds three occurrences right to left") {
    Worked w;
    const auto r = net_ndp(w.seq, w.pattern, w.limits, Metric::ordinal);
    CHECK(r.algorithm == "netndp");
    CHECK(positions(r.occurrences) ==
          std::vector<std::vector<int>>{{4, 6, 7, 9}, {2, 3, 6, 7}, {1, 2, 5, 6}});
    for (const auto& o : r.occurrences)
        CHECK(o.gdist == 1);
    CHECK(positions(r.sorted_occurrences()) ==
          std::vector<std::vector<int>>{{1, 2, 5, 6}, {2, 3, 6, 7}, {4, 6, 7, 9}});
    CHECK(r.parent_retries == 0);
    CHECK(r.stats == NodeEdgeStats{27, 29, 2, 6});
    CHECK(r.params.pattern == "b[0,1]a[0,2]b[0,2]b");
    CHECK(r.params.prune);
    REQUIRE(r.profiles.size() == 3);
    CHECK(r.profiles[0].metric == std::vector<Distance>{0, 1, 0, 0});
}

TEST_CASE("net_ndp on acaba") {
    const auto r = net_ndp(rank_sequence("acaba", lower), parse_pattern("a[0,1]b[0,2]a", lower),
                           {1, 1}, Metric::ordinal);
    CHECK(positions(r.sorted_occurrences()) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}});
}

TEST_CASE("zero thresholds give exact nonoverlapping matching") {
    const auto r = net_ndp(rank_sequence("ababa", lower), parse_pattern("a[0,0]b", lower),
                           {0, 0}, Metric::ordinal);
    CHECK(positions(r.sorted_occurrences()) == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    for (const auto& o : r.occurrences)
        CHECK(o.gdist == 0);
}

TEST_CASE("no candidates gives an empty report") {
    const auto r = net_ndp(rank_sequence("zzzz", lower), parse_pattern("a[0,1]b", lower),
                           {1, 1}, Metric::ordinal);
    CHECK(r.occ_count() == 0);
    CHECK(r.stats.total_nodes == 0);
}

TEST_CASE("symbols outside the alphabet never match") {
    const auto seq = rank_sequence("a?b", Alphabet("ab"), Strictness::lenient);
    const auto r = net_ndp(seq, parse_pattern("a[0,1]b", Alphabet("ab")), {5, 5},
                           Metric::ordinal);
    CHECK(positions(r.occurrences) == std::vector<std::vector<int>>{{1, 3}});
}

TEST_CASE("verify_occurrence checks gaps, local and global bounds") {
    const auto seq = rank_sequence("acaba", lower);
    const auto p = parse_pattern("a[0,1]b[0,2]a", lower);
    const Thresholds lim{1, 1};
    CHECK(verify_occurrence(seq, p, {{1, 2, 3}, 0}, lim, Metric::ordinal));
    CHECK_FALSE(verify_occurrence(seq, p, {{2, 4, 5}, 0}, lim, Metric::ordinal));
    CHECK_FALSE(verify_occurrence(seq, p, {{1, 3, 4}, 0}, lim, Metric::ordinal));
    CHECK_FALSE(verify_occurrence(seq, p, {{1, 4, 5}, 0}, lim, Metric::ordinal));
    CHECK_FALSE(verify_occurrence(seq, p, {{1, 2}, 0}, lim, Metric::ordinal));
    CHECK_FALSE(verify_occurrence(seq, p, {{0, 2, 3}, 0}, lim, Metric::ordinal));
    CHECK_FALSE(verify_occurrence(seq, p, {{3, 4, 6}, 0}, lim, Metric::ordinal));
    CHECK(occurrence_distance(seq, p, {1, 3, 4}, Metric::ordinal) == 2);
}

TEST_CASE("deviation profile reports ordinal distances under either metric") {
    const auto seq = rank_sequence("aza", lower);
    const auto p = parse_pattern("a[0,0]a[0,0]a", lower);
    const Occurrence occ{{1, 2, 3}, 1};
    const auto ham = deviation_profile(seq, p, occ, Metric::indicator);
    CHECK(ham.metric == std::vector<Distance>{0, 1, 0});
    CHECK(ham.ordinal == std::vector<Distance>{0, 25, 0});
    CHECK(ham.max_ordinal() == 25);
}

TEST_CASE("random instances: valid, nonoverlapping, prune-independent, no retries") {
    const auto corpus = testing::random_corpus(300, 3);
    for (const auto& inst : corpus) {
        CAPTURE(inst.describe());
        const auto a = net_ndp(inst.seq, inst.pattern, inst.limits, Metric::ordinal, true);
        const auto b = net_ndp(inst.seq, inst.pattern, inst.limits, Metric::ordinal, false);
        CHECK(a.occurrences == b.occurrences);
        CHECK(a.parent_retries == 0);
        CHECK(b.parent_retries == 0);
        CHECK(pairwise_nonoverlapping(a.occurrences));
        for (const auto& o : a.occurrences) {
            CHECK(verify_occurrence(inst.seq, inst.pattern, o, inst.limits, Metric::ordinal));
            CHECK(o.gdist == occurrence_distance(inst.seq, inst.pattern, o.positions,
                                                 Metric::ordinal));
        }
        // Each root yields at most one occurrence, found right to left.
        for (std::size_t k = 1; k < a.occurrences.size(); ++k)
            CHECK(a.occurrences[k].positions.front() < a.occurrences[k - 1].positions.front());
        CHECK(a.stats.total_nodes <= b.stats.total_nodes);
        CHECK(a.stats.total_edges <= b.stats.total_edges);
    }
}

TEST_CASE("indicator metric behaves as a mismatch budget") {
    const auto corpus = testing::random_corpus(200, 5);
    for (const auto& inst : corpus) {
        CAPTURE(inst.describe());
        const Thresholds lim{1, inst.limits.gamma};
        const auto r = net_ndp(inst.seq, inst.pattern, lim, Metric::indicator);
        for (const auto& o : r.occurrences) {
            int mismatches = 0;
            for (std::size_t j = 0; j < o.positions.size(); ++j)
                mismatches += inst.seq.symbols[o.positions[j] - 1] != inst.pattern.chars[j];
            CHECK(mismatches <= lim.gamma);
            CHECK(mismatches == o.gdist);
        }
        CHECK(r.occ_count() <=
              max_nonoverlapping(enumerate_all(inst.seq, inst.pattern, lim, Metric::indicator))
                  .count);
    }
}
