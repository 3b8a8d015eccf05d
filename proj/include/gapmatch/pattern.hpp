#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gapmatch/alphabet.hpp"

namespace gapmatch {

/// Allowed number of skipped sequence positions between two consecutive pattern symbols.
struct Gap {
    int min = 0;
    int max = 0;

    int width() const noexcept { return max - min + 1; }

    friend bool operator==(const Gap&, const Gap&) = default;
};

/// Gap-constrained pattern p1[min1,max1]p2...pm.
///
/// `ranks` caches the alphabet rank of each symbol so matching never touches characters.
struct Pattern {
    std::string chars;
    std::vector<Gap> gaps;          // chars.size() - 1 entries
    std::vector<std::int32_t> ranks;

    std::size_t size() const noexcept { return chars.size(); }

    /// Largest gap window, max over j of (max_j - min_j + 1); 1 for single-symbol patterns.
    int width() const noexcept;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Parses `symbol ("[" uint "," uint "]" symbol)*` with no whitespace.
///
/// Throws SyntaxError for grammar violations, ConstraintError for a negative bound or
/// min > max, AlphabetError for a symbol outside `alphabet`.
Pattern parse_pattern(std::string_view text, const Alphabet& alphabet);

/// Canonical text form; parse_pattern(format_pattern(p), a) == p.
std::string format_pattern(const Pattern& p);

/// Builds a pattern from parts, validating it the same way parse_pattern does.
Pattern make_pattern(std::string_view chars, std::vector<Gap> gaps, const Alphabet& alphabet);

} // namespace gapmatch
