#pragma once

#include <string>
#include <vector>

#include "gapmatch/alphabet.hpp"
#include "gapmatch/sequence.hpp"

namespace gapmatch {

/// Numeric series read from a CSV column.
struct TimeSeries {
    std::vector<double> values;
    std::string label;
};

/// One RankedSequence per '>' record; the header (without '>') becomes source_id and the
/// record's lines are concatenated. Residues are case-folded onto the alphabet.
/// Blank lines and ';' comment lines are skipped.
///
/// Throws IoError if the file cannot be read, DataError for content before the first header
/// or an empty record, and AlphabetError for unknown residues in strict mode.
std::vector<RankedSequence> read_fasta(const std::string& path, const Alphabet& alphabet,
                                       Strictness strictness = Strictness::strict);

/// Whole file as one sequence with all whitespace removed. source_id is the path.
/// Throws DataError if nothing remains.
RankedSequence read_plain(const std::string& path, const Alphabet& alphabet,
                          Strictness strictness = Strictness::strict);

/// Reads one column of a headered CSV. `column` names a header cell; if no header matches
/// and it is a non-negative integer, it is taken as a 0-based column index.
///
/// Throws DataError naming the line for a missing or non-numeric cell, and for an unknown
/// column.
TimeSeries read_series_csv(const std::string& path, const std::string& column);

} // namespace gapmatch
