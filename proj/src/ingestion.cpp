#include "gapmatch/ingestion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gapmatch/error.hpp"

namespace gapmatch {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    return in;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::string_view unquote(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t begin = 0;
    while (true) {
        const auto comma = line.find(',', begin);
        cells.push_back(unquote(line.substr(begin, comma - begin)));
        if (comma == std::string_view::npos)
            break;
        begin = comma + 1;
    }
    return cells;
}

// Appends the non-space characters of `line`, folded onto the alphabet.
void append_residues(std::string& out, std::string_view line, const Alphabet& alphabet) {
    for (char c : line)
        if (!is_space(c))
            out.push_back(alphabet.fold_case(c));
}

} // namespace

std::vector<RankedSequence> read_fasta(const std::string& path, const Alphabet& alphabet,
                                       Strictness strictness) {
    auto in = open_or_throw(path);
    struct Record {
        std::string header;
        std::string residues;
    };
    std::vector<Record> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == ';')
            continue;
        if (text.front() == '>') {
            records.push_back({std::string(trim(text.substr(1))), {}});
            continue;
        }
        if (records.empty())
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": sequence data before the first '>' header");
        append_residues(records.back().residues, text, alphabet);
    }
    if (records.empty())
        throw DataError(path + ": no FASTA records");

    std::vector<RankedSequence> out;
    out.reserve(records.size());
    for (auto& rec : records) {
        if (rec.residues.empty())
            throw DataError(path + ": record '" + rec.header + "' has no residues");
        out.push_back(rank_sequence(rec.residues, alphabet, strictness, rec.header));
    }
    return out;
}

RankedSequence read_plain(const std::string& path, const Alphabet& alphabet,
                          Strictness strictness) {
    auto in = open_or_throw(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string residues;
    append_residues(residues, buf.str(), alphabet);
    if (residues.empty())
        throw DataError(path + ": no sequence data");
    return rank_sequence(residues, alphabet, strictness, path);
}

TimeSeries read_series_csv(const std::string& path, const std::string& column) {
    auto in = open_or_throw(path);
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string_view> header;
    std::string header_line;
    while (std::getline(in, header_line)) {
        ++line_no;
        if (!trim(header_line).empty())
            break;
    }
    if (trim(header_line).empty())
        throw DataError(path + ": missing CSV header");
    header = split_csv(trim(header_line));

    std::size_t col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == column) {
            col = i;
            break;
        }
    if (col == header.size()) {
        std::size_t index = 0;
        const auto* first = column.data();
        const auto* last = column.data() + column.size();
        auto [ptr, ec] = std::from_chars(first, last, index);
        if (column.empty() || ec != std::errc{} || ptr != last || index >= header.size())
            throw DataError(path + ": no column '" + column + "'");
        col = index;
    }

    TimeSeries series;
    series.label = std::string(header[col]);
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty())
            continue;
        const auto cells = split_csv(text);
        const auto where = path + ":" + std::to_string(line_no) + ": ";
        if (col >= cells.size())
            throw DataError(where + "missing column '" + series.label + "'");
        const auto cell = cells[col];
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size())
            throw DataError(where + "non-numeric value '" + std::string(cell) + "' in column '" +
                            series.label + "'");
        series.values.push_back(value);
    }
    return series;
}

} // namespace gapmatch
