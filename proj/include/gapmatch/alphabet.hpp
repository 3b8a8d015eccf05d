#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>

namespace gapmatch {

/// Integer distance between symbols. Saturates at kInfiniteDistance.
using Distance = std::int32_t;

inline constexpr Distance kInfiniteDistance = std::numeric_limits<Distance>::max() / 4;

/// Rank given to symbols outside the alphabet when lenient ranking is enabled.
/// Its distance to everything (itself included) is kInfiniteDistance, so it never matches.
inline constexpr std::int32_t kUnknownRank = -1;

inline constexpr Distance saturating_add(Distance a, Distance b) noexcept {
    return (a >= kInfiniteDistance - b) ? kInfiniteDistance : a + b;
}

enum class Metric {
    ordinal,   ///< |rank(c) - rank(d)|
    indicator  ///< 0 if equal, 1 otherwise (Hamming per position)
};

std::string_view to_string(Metric m) noexcept;
/// Accepts "ordinal" and "indicator"/"hamming".
Metric metric_from_string(std::string_view name);

/// How ranking treats characters outside the alphabet.
enum class Strictness { strict, lenient };

/// Ordered set of distinct single-byte symbols. Rank is the 0-based position in the list.
class Alphabet {
public:
    /// Throws ConstraintError on empty input or duplicate symbols.
    explicit Alphabet(std::string_view symbols);

    /// a..z
    static Alphabet lowercase();
    /// A..Z
    static Alphabet uppercase();
    /// First `size` uppercase letters (A, B, C, ...), 1 <= size <= 26.
    static Alphabet uppercase_prefix(std::size_t size);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbols() const noexcept { return symbols_; }

    bool contains(char c) const noexcept { return rank_[index(c)] != kUnknownRank; }

    /// Throws AlphabetError if `c` is not a member.
    std::int32_t rank(char c) const;
    /// kUnknownRank if `c` is not a member.
    std::int32_t rank_or_unknown(char c) const noexcept { return rank_[index(c)]; }

    char symbol(std::int32_t rank) const;

    /// Maps `c` onto the alphabet by trying c, toupper(c), tolower(c) in that order.
    /// Returns `c` unchanged when no variant is a member.
    char fold_case(char c) const noexcept;

    friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
        return a.symbols_ == b.symbols_;
    }

private:
    static std::size_t index(char c) noexcept { return static_cast<unsigned char>(c); }

    std::string symbols_;
    std::array<std::int32_t, 256> rank_{};
};

/// Distance between two ranks. Either rank being kUnknownRank gives kInfiniteDistance.
inline Distance rank_distance(std::int32_t a, std::int32_t b, Metric m) noexcept {
    if (a == kUnknownRank || b == kUnknownRank)
        return kInfiniteDistance;
    if (m == Metric::indicator)
        return a == b ? 0 : 1;
    return a > b ? a - b : b - a;
}

/// Per-character distance. Throws AlphabetError if either symbol is not in `alphabet`.
Distance delta_distance(char c, char d, const Alphabet& alphabet, Metric m);

/// Sum of per-position delta distances. Throws ConstraintError on length mismatch.
Distance gamma_distance(std::string_view x, std::string_view y, const Alphabet& alphabet,
                        Metric m);

/// Loads an alphabet file: the first non-empty line lists the ordered symbols.
Alphabet read_alphabet_file(const std::string& path);

} // namespace gapmatch
