#include <doctest.h>

#include <random>

#include "gapmatch/error.hpp"
#include "gapmatch/ingestion.hpp"
#include "support/temp_file.hpp"

using namespace gapmatch;
using testing::TempFile;

namespace {
const Alphabet upper = Alphabet::uppercase();
const Alphabet lower = Alphabet::lowercase();
}

TEST_CASE("two FASTA records") {
    TempFile f("two.fa", ">first record\nACDE\nFG\n\n>second\nMKV\n");
    const auto seqs = read_fasta(f.path(), upper);
    REQUIRE(seqs.size() == 2);
    CHECK(seqs[0].source_id == "first record");
    CHECK(seqs[0].symbols == "ACDEFG");
    CHECK(seqs[0].size() == 6);
    CHECK(seqs[1].source_id == "second");
    CHECK(seqs[1].size() == 3);
}

TEST_CASE("a 2578-residue record keeps its length") {
    std::mt19937 rng(2578);
    const std::string residues = "ACDEFGHIKLMNPQRSTVWY";
    std::string body;
    std::string record;
    for (int i = 0; i < 2578; ++i) {
        record += residues[rng() % residues.size()];
        body += record.back();
        if (i % 60 == 59)
            body += '\n';
    }
    TempFile f("long.fa", ">S1\n" + body + "\n");
    const auto seqs = read_fasta(f.path(), upper);
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].size() == 2578);
    CHECK(seqs[0].symbols == record);
}

TEST_CASE("lowercase residues rank like uppercase ones") {
    TempFile mixed("mixed.fa", ">m\nacDEf\n");
    TempFile plain("upper.fa", ">u\nACDEF\n");
    const auto a = read_fasta(mixed.path(), upper);
    const auto b = read_fasta(plain.path(), upper);
    CHECK(a[0].ranks == b[0].ranks);
    CHECK(a[0].symbols == "ACDEF");
}

TEST_CASE("CRLF line endings and comment lines") {
    TempFile f("crlf.fa", ";comment\r\n>x\r\nAC\r\nDE\r\n");
    const auto seqs = read_fasta(f.path(), upper);
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].symbols == "ACDE");
    CHECK(seqs[0].source_id == "x");
}

TEST_CASE("malformed FASTA") {
    TempFile headless("headless.fa", "ACDE\n>x\nAC\n");
    CHECK_THROWS_AS(read_fasta(headless.path(), upper), DataError);
    TempFile empty_record("empty_rec.fa", ">x\n>y\nAC\n");
    CHECK_THROWS_AS(read_fasta(empty_record.path(), upper), DataError);
    TempFile nothing("nothing.fa", "\n\n");
    CHECK_THROWS_AS(read_fasta(nothing.path(), upper), DataError);
    CHECK_THROWS_AS(read_fasta("/nonexistent/gapmatch.fa", upper), IoError);
}

TEST_CASE("ambiguity codes follow strictness") {
    TempFile f("ambig.fa", ">x\nACXDE\n");
    CHECK(read_fasta(f.path(), upper)[0].size() == 5);
    const Alphabet protein("ACDEFGHIKLMNPQRSTVWY");
    CHECK_THROWS_AS(read_fasta(f.path(), protein), AlphabetError);
    const auto lenient = read_fasta(f.path(), protein, Strictness::lenient);
    CHECK(lenient[0].ranks[2] == kUnknownRank);
}

TEST_CASE("plain text sequence") {
    TempFile f("acaba.txt", "acaba");
    const auto s = read_plain(f.path(), lower);
    CHECK(s.size() == 5);
    CHECK(s.ranks == std::vector<std::int32_t>{0, 2, 0, 1, 0});
    CHECK(s.source_id == f.path());
}

TEST_CASE("plain text ignores a trailing newline and inner whitespace") {
    TempFile a("nl.txt", "acaba\n");
    TempFile b("ws.txt", "ac ab\r\na\n");
    CHECK(read_plain(a.path(), lower).symbols == "acaba");
    CHECK(read_plain(b.path(), lower).symbols == "acaba");
}

TEST_CASE("empty plain file is an error") {
    TempFile f("empty.txt", "");
    CHECK_THROWS_AS(read_plain(f.path(), lower), DataError);
    TempFile g("blank.txt", " \n\n");
    CHECK_THROWS_AS(read_plain(g.path(), lower), DataError);
}

TEST_CASE("900-row CSV column") {
    std::string csv = "time,value\n";
    for (int i = 0; i < 900; ++i)
        csv += std::to_string(i) + "," + std::to_string(0.5 * i - 3.25) + "\n";
    TempFile f("series.csv", csv);
    const auto by_name = read_series_csv(f.path(), "value");
    CHECK(by_name.values.size() == 900);
    CHECK(by_name.values[1] == doctest::Approx(-2.75));
    CHECK(by_name.label == "value");
    const auto by_index = read_series_csv(f.path(), "1");
    CHECK(by_index.values == by_name.values);
}

TEST_CASE("single-row CSV") {
    TempFile f("one.csv", "x\n4.5\n");
    const auto s = read_series_csv(f.path(), "x");
    REQUIRE(s.values.size() == 1);
    CHECK(s.values[0] == 4.5);
}

TEST_CASE("non-numeric CSV cell names the line") {
    TempFile f("bad.csv", "x,y\n1,2\n3,abc\n");
    try {
        read_series_csv(f.path(), "y");
        FAIL("expected DataError");
    } catch (const DataError& e) {
        const std::string msg = e.what();
        CHECK(msg.find(":3:") != std::string::npos);
        CHECK(msg.find("abc") != std::string::npos);
    }
}

TEST_CASE("missing CSV column") {
    TempFile f("cols.csv", "x,y\n1,2\n");
    CHECK_THROWS_AS(read_series_csv(f.path(), "z"), DataError);
    CHECK_THROWS_AS(read_series_csv(f.path(), "5"), DataError);
    TempFile short_row("short.csv", "x,y\n1,2\n3\n");
    CHECK_THROWS_AS(read_series_csv(short_row.path(), "y"), DataError);
    CHECK_THROWS_AS(read_series_csv("/nonexistent/gapmatch.csv", "x"), IoError);
}
