#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gapmatch/matcher.hpp"

namespace gapmatch::cli {

/// A match report tied to the sequence it was computed on.
struct SequenceReport {
    std::string source_id;
    MatchReport report;
};

/// "hamming(<gamma>)" for the indicator metric, "delta-gamma(<delta>,<gamma>)" otherwise.
std::string metric_label(const MatchParams& params);

/// An occurrence is flagged when some position deviates from the pattern by more than delta
/// in ordinal distance. Never true for ordinal-metric results.
bool flagged(const DeviationProfile& profile, Distance delta);

double elapsed_ms(const MatchReport& report);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

/// Layout is documented in docs/report-schema.md.
void write_json(std::ostream& out, const std::vector<SequenceReport>& reports);
/// One row per occurrence; header row always present.
void write_csv(std::ostream& out, const std::vector<SequenceReport>& reports);
void write_text(std::ostream& out, const std::vector<SequenceReport>& reports, bool with_stats);

extern const char* const kMatchCsvHeader;

} // namespace gapmatch::cli
