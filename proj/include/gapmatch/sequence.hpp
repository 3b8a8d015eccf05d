#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gapmatch/alphabet.hpp"

namespace gapmatch {

/// A sequence s1..sn with each symbol mapped to its alphabet rank.
/// Symbols outside the alphabet (lenient ranking only) carry kUnknownRank.
struct RankedSequence {
    std::string symbols;
    std::vector<std::int32_t> ranks;
    std::string source_id;

    std::size_t size() const noexcept { return symbols.size(); }
    bool empty() const noexcept { return symbols.empty(); }
};

/// Ranks `text` verbatim. Strict mode throws AlphabetError naming the first bad symbol.
RankedSequence rank_sequence(std::string_view text, const Alphabet& alphabet,
                             Strictness strictness = Strictness::strict,
                             std::string source_id = {});

} // namespace gapmatch
