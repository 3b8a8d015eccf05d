#include <doctest.h>

#include <fstream>
#include <filesystem>

#include "gapmatch/alphabet.hpp"
#include "gapmatch/error.hpp"
#include "gapmatch/sequence.hpp"

using namespace gapmatch;

namespace {
const Alphabet lower = Alphabet::lowercase();
}

TEST_CASE("per-symbol and summed distances on aef vs cee") {
    CHECK(delta_distance('a', 'c', lower, Metric::ordinal) == 2);
    CHECK(delta_distance('e', 'e', lower, Metric::ordinal) == 0);
    CHECK(delta_distance('f', 'e', lower, Metric::ordinal) == 1);
    CHECK(gamma_distance("aef", "cee", lower, Metric::ordinal) == 3);
}

TEST_CASE("indicator metric counts mismatches") {
    CHECK(delta_distance('a', 'c', lower, Metric::indicator) == 1);
    CHECK(delta_distance('c', 'c', lower, Metric::indicator) == 0);
    CHECK(gamma_distance("aef", "cee", lower, Metric::indicator) == 2);
}

TEST_CASE("summed distance of a string with itself is zero") {
    for (const char* s : {"", "a", "acaba", "zzzz", "baabcbbab"}) {
        CHECK(gamma_distance(s, s, lower, Metric::ordinal) == 0);
        CHECK(gamma_distance(s, s, lower, Metric::indicator) == 0);
    }
}

TEST_CASE("length mismatch is a constraint error") {
    CHECK_THROWS_AS(gamma_distance("ab", "abc", lower, Metric::ordinal), ConstraintError);
}

TEST_CASE("symbols outside the alphabet are rejected") {
    CHECK_THROWS_AS(delta_distance('A', 'a', lower, Metric::ordinal), AlphabetError);
    CHECK_THROWS_AS(gamma_distance("a1", "ab", lower, Metric::ordinal), AlphabetError);
}

TEST_CASE("metric axioms hold exhaustively over a small alphabet") {
    const Alphabet a("abcdefg");
    const auto& s = a.symbols();
    for (auto m : {Metric::ordinal, Metric::indicator}) {
        for (char x : s) {
            CHECK(delta_distance(x, x, a, m) == 0);
            for (char y : s) {
                const auto dxy = delta_distance(x, y, a, m);
                CHECK(dxy == delta_distance(y, x, a, m));
                CHECK((dxy == 0) == (x == y));
                for (char z : s)
                    CHECK(delta_distance(x, z, a, m) <= dxy + delta_distance(y, z, a, m));
            }
        }
    }
}

TEST_CASE("appending a position never lowers the summed distance") {
    const Alphabet a("abcd");
    const auto& s = a.symbols();
    for (auto m : {Metric::ordinal, Metric::indicator})
        for (char x1 : s)
            for (char x2 : s)
                for (char y1 : s)
                    for (char y2 : s) {
                        const std::string x{x1, x2}, y{y1, y2};
                        const auto base = gamma_distance(x, y, a, m);
                        for (char c : s)
                            for (char d : s)
                                CHECK(gamma_distance(x + c, y + d, a, m) >= base);
                    }
}

TEST_CASE("indicator metric with local bound 1 is a mismatch budget") {
    const Alphabet a("abc");
    const auto& s = a.symbols();
    // All length-3 strings against "abc": sum <= h iff mismatches <= h.
    for (char x : s)
        for (char y : s)
            for (char z : s) {
                const std::string t{x, y, z};
                int mismatches = (x != 'a') + (y != 'b') + (z != 'c');
                for (int h = 0; h <= 3; ++h) {
                    bool local_ok = true;
                    for (int i = 0; i < 3; ++i)
                        local_ok &= delta_distance(t[i], "abc"[i], a, Metric::indicator) <= 1;
                    const bool within =
                        local_ok && gamma_distance(t, "abc", a, Metric::indicator) <= h;
                    CHECK(within == (mismatches <= h));
                }
            }
}

TEST_CASE("alphabet construction and ranks") {
    const Alphabet a("ACGT");
    CHECK(a.size() == 4);
    CHECK(a.rank('A') == 0);
    CHECK(a.rank('T') == 3);
    CHECK(a.symbol(2) == 'G');
    CHECK_FALSE(a.contains('a'));
    CHECK(a.rank_or_unknown('N') == kUnknownRank);
    CHECK_THROWS_AS(a.rank('N'), AlphabetError);
    CHECK_THROWS_AS(Alphabet(""), ConstraintError);
    CHECK_THROWS_AS(Alphabet("ABA"), ConstraintError);
    CHECK(Alphabet::uppercase_prefix(20).symbols() == "ABCDEFGHIJKLMNOPQRST");
    CHECK_THROWS(Alphabet::uppercase_prefix(0));
    CHECK_THROWS(Alphabet::uppercase_prefix(27));
    CHECK(a.fold_case('g') == 'G');
    CHECK(lower.fold_case('Q') == 'q');
    CHECK(a.fold_case('n') == 'n');
}

TEST_CASE("metric names") {
    CHECK(metric_from_string("ordinal") == Metric::ordinal);
    CHECK(metric_from_string("hamming") == Metric::indicator);
    CHECK(metric_from_string("indicator") == Metric::indicator);
    CHECK(to_string(Metric::ordinal) == "ordinal");
    CHECK_THROWS(metric_from_string("edit"));
}

TEST_CASE("unknown ranks never match") {
    CHECK(rank_distance(kUnknownRank, kUnknownRank, Metric::ordinal) == kInfiniteDistance);
    CHECK(rank_distance(kUnknownRank, 0, Metric::indicator) == kInfiniteDistance);
    CHECK(saturating_add(kInfiniteDistance, 5) == kInfiniteDistance);
    CHECK(saturating_add(3, 4) == 7);
}

TEST_CASE("ranking a sequence") {
    const auto s = rank_sequence("acaba", lower);
    CHECK(s.ranks == std::vector<std::int32_t>{0, 2, 0, 1, 0});
    CHECK(s.size() == 5);
    CHECK_THROWS_AS(rank_sequence("acXba", lower), AlphabetError);
    const auto lenient = rank_sequence("acXba", lower, Strictness::lenient);
    CHECK(lenient.ranks[2] == kUnknownRank);
}

TEST_CASE("alphabet file uses the first non-empty line") {
    const auto path = std::filesystem::temp_directory_path() / "gapmatch_alphabet_test.txt";
    {
        std::ofstream out(path);
        out << "\n  ABCDEFGHIJKLMNOPQRST \nignored\n";
    }
    CHECK(read_alphabet_file(path.string()).symbols() == "ABCDEFGHIJKLMNOPQRST");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_alphabet_file(path.string()), IoError);
}
