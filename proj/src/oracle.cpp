#include "gapmatch/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "gapmatch/error.hpp"

namespace gapmatch {

std::vector<Occurrence> enumerate_all(const RankedSequence& seq, const Pattern& pattern,
                                      Thresholds limits, Metric metric,
                                      EnumerateOptions options) {
    std::vector<Occurrence> out;
    const auto n = static_cast<int>(seq.size());
    const auto m = pattern.size();
    if (m == 0)
        return out;
    std::vector<int> positions(m);

    const auto dist = [&](int pos, std::size_t j) {
        return rank_distance(seq.ranks[static_cast<std::size_t>(pos - 1)], pattern.ranks[j],
                             metric);
    };

    // Extends a prefix of length j whose last position is positions[j-1].
    std::function<void(std::size_t, Distance)> extend = [&](std::size_t j, Distance spent) {
        if (j == m) {
            if (spent > limits.gamma)
                return;
            if (options.max_occurrences != 0 && out.size() >= options.max_occurrences)
                throw DataError("more than " + std::to_string(options.max_occurrences) +
                                " occurrences; instance too large to enumerate");
            out.push_back(Occurrence{positions, spent});
            return;
        }
        const auto& gap = pattern.gaps[j - 1];
        const int lo = positions[j - 1] + 1 + gap.min;
        const int hi = std::min(n, positions[j - 1] + 1 + gap.max);
        for (int pos = lo; pos <= hi; ++pos) {
            const Distance d = dist(pos, j);
            if (d > limits.delta)
                continue;
            const Distance total = saturating_add(spent, d);
            if (options.budget_pruning && total > limits.gamma)
                continue;
            positions[j] = pos;
            extend(j + 1, total);
        }
    };

    for (int first = 1; first <= n; ++first) {
        const Distance d = dist(first, 0);
        if (d > limits.delta)
            continue;
        if (options.budget_pruning && d > limits.gamma)
            continue;
        positions[0] = first;
        extend(1, d);
    }
    return out;
}

namespace {

using State = std::vector<std::uint64_t>;

struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : s)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

class MaxPackingSearch {
public:
    MaxPackingSearch(const std::vector<Occurrence>& occs, MaxSearchOptions options)
        : occs_(occs), options_(options) {
        m_ = occs.front().positions.size();
        for (const auto& o : occs) {
            if (o.positions.size() != m_)
                throw LogicError("occurrences must all have the same length");
            for (std::size_t j = 1; j < m_; ++j) {
                if (o.positions[j] <= o.positions[j - 1])
                    throw LogicError("occurrence positions must be strictly increasing");
                if (o.positions[j] - o.positions[0] >= 64)
                    throw DataError("occurrence span exceeds the 64-position search window");
            }
        }

        std::vector<std::size_t> order(occs.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return occs[a].positions[0] < occs[b].positions[0];
        });
        for (std::size_t i : order) {
            const int start = occs[i].positions[0];
            if (starts_.empty() || starts_.back() != start) {
                starts_.push_back(start);
                groups_.emplace_back();
            }
            groups_.back().push_back({i, mask(occs[i])});
        }
        memo_.resize(starts_.size());

        // relevant_[t]: slots, relative to starts_[t], that some occurrence starting at or
        // after starts_[t] still uses. Taken slots outside it cannot cause a clash.
        relevant_.assign(starts_.size(), State(m_ > 1 ? m_ - 1 : 0, 0));
        for (std::size_t t = starts_.size(); t-- > 0;) {
            auto& rel = relevant_[t];
            for (const auto& cand : groups_[t])
                for (std::size_t j = 0; j < rel.size(); ++j)
                    rel[j] |= cand.mask[j];
            if (t + 1 < starts_.size()) {
                const int delta = starts_[t + 1] - starts_[t];
                for (std::size_t j = 0; j < rel.size(); ++j)
                    if (delta < 64)
                        rel[j] |= relevant_[t + 1][j] << delta;
            }
        }
    }

    MaxNonoverlapping run() {
        MaxNonoverlapping result;
        State state(m_ > 1 ? m_ - 1 : 0, 0);
        result.count = static_cast<std::size_t>(best(0, state));

        // Replay the memo to recover one optimal choice per start.
        for (std::size_t t = 0; t < starts_.size(); ++t) {
            const int here = best(t, state);
            if (best(t + 1, shifted(t, state)) == here) {
                state = shifted(t, state);
                continue;
            }
            for (const auto& cand : groups_[t]) {
                if (!compatible(state, cand.mask))
                    continue;
                State next = merged(state, cand.mask);
                if (1 + best(t + 1, shifted(t, next)) == here) {
                    result.witness.push_back(occs_[cand.index]);
                    state = shifted(t, next);
                    break;
                }
            }
        }
        return result;
    }

private:
    struct Candidate {
        std::size_t index;
        State mask;  // per level >= 2, bit k = position start + k taken
    };

    State mask(const Occurrence& o) const {
        State s(m_ - 1, 0);
        for (std::size_t j = 1; j < m_; ++j)
            s[j - 1] |= std::uint64_t{1} << (o.positions[j] - o.positions[0]);
        return s;
    }

    static bool compatible(const State& state, const State& mask) {
        for (std::size_t j = 0; j < state.size(); ++j)
            if (state[j] & mask[j])
                return false;
        return true;
    }

    static State merged(const State& state, const State& mask) {
        State out = state;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] |= mask[j];
        return out;
    }

    // Re-anchors a state from starts_[t] to starts_[t + 1], keeping only slots that a
    // later occurrence could still clash with.
    State shifted(std::size_t t, const State& state) const {
        if (t + 1 >= starts_.size())
            return State(state.size(), 0);
        const int delta = starts_[t + 1] - starts_[t];
        State out(state.size(), 0);
        if (delta < 64)
            for (std::size_t j = 0; j < state.size(); ++j)
                out[j] = (state[j] >> delta) & relevant_[t + 1][j];
        return out;
    }

    int best(std::size_t t, const State& state) {
        if (t >= starts_.size())
            return 0;
        auto& table = memo_[t];
        if (auto it = table.find(state); it != table.end())
            return it->second;

        int value = best(t + 1, shifted(t, state));
        for (const auto& cand : groups_[t]) {
            if (!compatible(state, cand.mask))
                continue;
            value = std::max(value, 1 + best(t + 1, shifted(t, merged(state, cand.mask))));
        }
        if (options_.max_states != 0 && ++states_ > options_.max_states)
            throw DataError("maximum nonoverlapping search exceeded " +
                            std::to_string(options_.max_states) + " states");
        table.emplace(state, value);
        return value;
    }

    const std::vector<Occurrence>& occs_;
    MaxSearchOptions options_;
    std::size_t m_ = 0;
    std::vector<int> starts_;
    std::vector<std::vector<Candidate>> groups_;
    std::vector<State> relevant_;
    std::vector<std::unordered_map<State, int, StateHash>> memo_;
    std::size_t states_ = 0;
};

} // namespace

MaxNonoverlapping max_nonoverlapping(const std::vector<Occurrence>& occs,
                                     MaxSearchOptions options) {
    if (occs.empty())
        return {};
    return MaxPackingSearch(occs, options).run();
}

} // namespace gapmatch
