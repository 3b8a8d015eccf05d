#include "gapmatch/sequence.hpp"

#include <algorithm>

#include "gapmatch/error.hpp"
#include "gapmatch/occurrence.hpp"

namespace gapmatch {

RankedSequence rank_sequence(std::string_view text, const Alphabet& alphabet,
                             Strictness strictness, std::string source_id) {
    RankedSequence seq;
    seq.symbols = std::string(text);
    seq.source_id = std::move(source_id);
    seq.ranks.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto r = alphabet.rank_or_unknown(text[i]);
        if (r == kUnknownRank && strictness == Strictness::strict)
            throw AlphabetError(std::string("symbol '") + text[i] + "' at position " +
                                std::to_string(i + 1) +
                                (seq.source_id.empty() ? "" : " of '" + seq.source_id + "'") +
                                " is not in the alphabet");
        seq.ranks.push_back(r);
    }
    return seq;
}

bool pairwise_nonoverlapping(const std::vector<Occurrence>& occs) {
    std::size_t m = 0;
    for (const auto& o : occs)
        m = std::max(m, o.positions.size());
    std::vector<int> column;
    for (std::size_t j = 0; j < m; ++j) {
        column.clear();
        for (const auto& o : occs)
            if (j < o.positions.size())
                column.push_back(o.positions[j]);
        std::sort(column.begin(), column.end());
        if (std::adjacent_find(column.begin(), column.end()) != column.end())
            return false;
    }
    return true;
}

} // namespace gapmatch
