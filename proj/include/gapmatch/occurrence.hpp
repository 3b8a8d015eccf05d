#pragma once

#include <compare>
#include <vector>

#include "gapmatch/alphabet.hpp"

namespace gapmatch {

/// Position vector <l1..lm> (1-based, strictly increasing) and its total distance.
struct Occurrence {
    std::vector<int> positions;
    Distance gdist = 0;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
    friend auto operator<=>(const Occurrence& a, const Occurrence& b) {
        return a.positions <=> b.positions;
    }
};

/// Two occurrences overlap iff some level uses the same sequence position in both.
/// Sharing a position at different levels is allowed.
inline bool overlaps(const Occurrence& a, const Occurrence& b) noexcept {
    const auto m = a.positions.size() < b.positions.size() ? a.positions.size()
                                                           : b.positions.size();
    for (std::size_t j = 0; j < m; ++j)
        if (a.positions[j] == b.positions[j])
            return true;
    return false;
}

/// True iff no two members of `occs` overlap.
bool pairwise_nonoverlapping(const std::vector<Occurrence>& occs);

} // namespace gapmatch
