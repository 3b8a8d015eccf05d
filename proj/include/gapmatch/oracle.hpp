#pragma once

#include <cstddef>
#include <vector>

#include "gapmatch/nettree.hpp"
#include "gapmatch/occurrence.hpp"
#include "gapmatch/pattern.hpp"
#include "gapmatch/sequence.hpp"

namespace gapmatch {

struct EnumerateOptions {
    /// Abandon a prefix as soon as its partial distance exceeds gamma.
    bool budget_pruning = true;
    /// Throw DataError once more than this many occurrences have been produced. 0 = no cap.
    std::size_t max_occurrences = 0;
};

/// Every occurrence of `pattern` in `seq` satisfying the gap, local and global constraints,
/// with no overlap restriction, in lexicographic order of position vectors.
std::vector<Occurrence> enumerate_all(const RankedSequence& seq, const Pattern& pattern,
                                      Thresholds limits, Metric metric,
                                      EnumerateOptions options = {});

struct MaxNonoverlapping {
    std::size_t count = 0;
    std::vector<Occurrence> witness;
};

struct MaxSearchOptions {
    /// Throw DataError when the search memo grows past this many states. 0 = no cap.
    std::size_t max_states = 2'000'000;
};

/// Exact maximum subset of `occs` in which no two members overlap.
///
/// All members must have the same length and strictly increasing positions. The search
/// walks start positions left to right; because two occurrences with different first
/// positions can only clash on later levels, the state carried forward is the set of
/// (level, position) slots already taken at or beyond the current start, and states are
/// memoised. Throws DataError if the state budget or the 64-position window is exceeded.
MaxNonoverlapping max_nonoverlapping(const std::vector<Occurrence>& occs,
                                     MaxSearchOptions options = {});

} // namespace gapmatch
