#include "gapmatch/alphabet.hpp"

#include <cctype>
#include <fstream>

#include "gapmatch/error.hpp"

namespace gapmatch {

std::string_view to_string(Metric m) noexcept {
    return m == Metric::ordinal ? "ordinal" : "indicator";
}

Metric metric_from_string(std::string_view name) {
    if (name == "ordinal")
        return Metric::ordinal;
    if (name == "indicator" || name == "hamming")
        return Metric::indicator;
    throw ConstraintError("unknown metric '" + std::string(name) + "'");
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty())
        throw ConstraintError("alphabet must not be empty");
    rank_.fill(kUnknownRank);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto& slot = rank_[index(symbols_[i])];
        if (slot != kUnknownRank)
            throw ConstraintError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        slot = static_cast<std::int32_t>(i);
    }
}

Alphabet Alphabet::lowercase() { return Alphabet("abcdefghijklmnopqrstuvwxyz"); }

Alphabet Alphabet::uppercase() { return Alphabet("ABCDEFGHIJKLMNOPQRSTUVWXYZ"); }

Alphabet Alphabet::uppercase_prefix(std::size_t size) {
    if (size < 1 || size > 26)
        throw ConstraintError("uppercase alphabet size must be in 1..26");
    return Alphabet(std::string_view("ABCDEFGHIJKLMNOPQRSTUVWXYZ").substr(0, size));
}

std::int32_t Alphabet::rank(char c) const {
    const auto r = rank_[index(c)];
    if (r == kUnknownRank)
        throw AlphabetError(std::string("symbol '") + c + "' is not in the alphabet");
    return r;
}

char Alphabet::symbol(std::int32_t rank) const {
    if (rank < 0 || static_cast<std::size_t>(rank) >= symbols_.size())
        throw AlphabetError("rank " + std::to_string(rank) + " is outside the alphabet");
    return symbols_[static_cast<std::size_t>(rank)];
}

char Alphabet::fold_case(char c) const noexcept {
    if (contains(c))
        return c;
    const auto uc = static_cast<unsigned char>(c);
    const char upper = static_cast<char>(std::toupper(uc));
    if (contains(upper))
        return upper;
    const char lower = static_cast<char>(std::tolower(uc));
    if (contains(lower))
        return lower;
    return c;
}

Distance delta_distance(char c, char d, const Alphabet& alphabet, Metric m) {
    return rank_distance(alphabet.rank(c), alphabet.rank(d), m);
}

Distance gamma_distance(std::string_view x, std::string_view y, const Alphabet& alphabet,
                        Metric m) {
    if (x.size() != y.size())
        throw ConstraintError("gamma distance needs equal lengths (" + std::to_string(x.size()) +
                              " vs " + std::to_string(y.size()) + ")");
    Distance total = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        total = saturating_add(total, delta_distance(x[i], y[i], alphabet, m));
    return total;
}

Alphabet read_alphabet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open alphabet file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        std::string symbols;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                symbols.push_back(c);
        if (!symbols.empty())
            return Alphabet(symbols);
    }
    throw DataError("alphabet file '" + path + "' has no symbols");
}

} // namespace gapmatch
