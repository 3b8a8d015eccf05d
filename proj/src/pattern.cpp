#include "gapmatch/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "gapmatch/error.hpp"

namespace gapmatch {

int Pattern::width() const noexcept {
    int w = 1;
    for (const auto& g : gaps)
        w = std::max(w, g.width());
    return w;
}

namespace {

// Recursive-descent over the flat grammar; `pos_` always points at the next unread char.
class PatternParser {
public:
    PatternParser(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Pattern parse() {
        if (text_.empty())
            throw SyntaxError("empty pattern", 0);
        Pattern p;
        p.chars.push_back(symbol());
        while (!done()) {
            p.gaps.push_back(gap());
            if (done())
                throw SyntaxError("pattern ends with a gap; expected a symbol", pos_);
            p.chars.push_back(symbol());
        }
        for (char c : p.chars)
            p.ranks.push_back(alphabet_.rank(c));
        return p;
    }

private:
    bool done() const noexcept { return pos_ >= text_.size(); }

    char symbol() {
        const char c = text_[pos_];
        if (c == '[' || c == ']' || c == ',' || c == '-' ||
            std::isspace(static_cast<unsigned char>(c)) ||
            std::isdigit(static_cast<unsigned char>(c)))
            throw SyntaxError(std::string("expected a pattern symbol, found '") + c + "'", pos_);
        if (!alphabet_.contains(c))
            throw AlphabetError(std::string("pattern symbol '") + c + "' at offset " +
                                std::to_string(pos_) + " is not in the alphabet");
        ++pos_;
        return c;
    }

    void expect(char c) {
        if (done())
            throw SyntaxError(std::string("unexpected end of pattern; expected '") + c + "'", pos_);
        if (text_[pos_] != c)
            throw SyntaxError(std::string("expected '") + c + "', found '" + text_[pos_] + "'",
                              pos_);
        ++pos_;
    }

    int bound() {
        const std::size_t start = pos_;
        if (!done() && text_[pos_] == '-') {
            // Report a negative number as a constraint violation, but only if it is one.
            std::size_t end = pos_ + 1;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
            if (end > pos_ + 1)
                throw ConstraintError("negative gap bound at offset " + std::to_string(start));
            throw SyntaxError("expected a non-negative integer", start);
        }
        int value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ptr == first)
            throw SyntaxError("expected a non-negative integer", start);
        if (ec == std::errc::result_out_of_range)
            throw SyntaxError("gap bound out of range", start);
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    Gap gap() {
        const std::size_t open = pos_;
        expect('[');
        Gap g;
        g.min = bound();
        expect(',');
        g.max = bound();
        expect(']');
        if (g.min > g.max)
            throw ConstraintError("gap [" + std::to_string(g.min) + "," + std::to_string(g.max) +
                                  "] at offset " + std::to_string(open) + " has min > max");
        return g;
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Pattern parse_pattern(std::string_view text, const Alphabet& alphabet) {
    return PatternParser(text, alphabet).parse();
}

std::string format_pattern(const Pattern& p) {
    std::string out;
    for (std::size_t j = 0; j < p.chars.size(); ++j) {
        if (j > 0) {
            const auto& g = p.gaps[j - 1];
            out += '[';
            out += std::to_string(g.min);
            out += ',';
            out += std::to_string(g.max);
            out += ']';
        }
        out += p.chars[j];
    }
    return out;
}

Pattern make_pattern(std::string_view chars, std::vector<Gap> gaps, const Alphabet& alphabet) {
    if (chars.empty())
        throw ConstraintError("pattern needs at least one symbol");
    if (gaps.size() + 1 != chars.size())
        throw ConstraintError("pattern with " + std::to_string(chars.size()) + " symbols needs " +
                              std::to_string(chars.size() - 1) + " gaps");
    Pattern p;
    p.chars = std::string(chars);
    for (const auto& g : gaps)
        if (g.min < 0 || g.min > g.max)
            throw ConstraintError("invalid gap [" + std::to_string(g.min) + "," +
                                  std::to_string(g.max) + "]");
    p.gaps = std::move(gaps);
    for (char c : p.chars)
        p.ranks.push_back(alphabet.rank(c));
    return p;
}

} // namespace gapmatch
