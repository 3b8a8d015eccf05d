#include "gapmatch/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace gapmatch::cli {

const char* const kMatchCsvHeader =
    "source_id,algorithm,label,occurrence,positions,gdist,deviation,ordinal_deviation,"
    "max_ordinal_deviation,flagged";

namespace {

template <typename Seq>
std::string joined(const Seq& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string metric_label(const MatchParams& params) {
    if (params.metric == Metric::indicator)
        return "hamming(" + std::to_string(params.limits.gamma) + ")";
    return "delta-gamma(" + std::to_string(params.limits.delta) + "," +
           std::to_string(params.limits.gamma) + ")";
}

bool flagged(const DeviationProfile& profile, Distance delta) {
    return profile.max_ordinal() > delta;
}

double elapsed_ms(const MatchReport& report) {
    return std::chrono::duration<double, std::milli>(report.elapsed).count();
}

void write_json(std::ostream& out, const std::vector<SequenceReport>& reports) {
    using nlohmann::json;
    json doc;
    doc["schema"] = "gapmatch.match/1";
    doc["reports"] = json::array();
    for (const auto& [source_id, r] : reports) {
        json j;
        j["source_id"] = source_id;
        j["algorithm"] = r.algorithm;
        j["label"] = metric_label(r.params);
        j["params"] = {{"pattern", r.params.pattern},
                       {"delta", r.params.limits.delta},
                       {"gamma", r.params.limits.gamma},
                       {"metric", std::string(to_string(r.params.metric))},
                       {"prune", r.params.prune}};
        j["occ_count"] = r.occ_count();
        json occs = json::array();
        for (std::size_t k = 0; k < r.occurrences.size(); ++k) {
            const auto& occ = r.occurrences[k];
            const auto& prof = r.profiles[k];
            occs.push_back({{"positions", occ.positions},
                            {"gdist", occ.gdist},
                            {"deviation", prof.metric},
                            {"ordinal_deviation", prof.ordinal},
                            {"max_ordinal_deviation", prof.max_ordinal()},
                            {"flagged", flagged(prof, r.params.limits.delta)}});
        }
        j["occurrences"] = std::move(occs);
        json sorted = json::array();
        for (const auto& occ : r.sorted_occurrences())
            sorted.push_back(occ.positions);
        j["sorted_positions"] = std::move(sorted);
        j["stats"] = {{"total_nodes", r.stats.total_nodes},
                      {"total_edges", r.stats.total_edges},
                      {"pruned_nodes", r.stats.pruned_nodes},
                      {"pruned_edges", r.stats.pruned_edges},
                      {"parent_retries", r.parent_retries}};
        j["elapsed_ms"] = elapsed_ms(r);
        doc["reports"].push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
}

void write_csv(std::ostream& out, const std::vector<SequenceReport>& reports) {
    out << kMatchCsvHeader << '\n';
    for (const auto& [source_id, r] : reports) {
        const auto label = metric_label(r.params);
        for (std::size_t k = 0; k < r.occurrences.size(); ++k) {
            const auto& occ = r.occurrences[k];
            const auto& prof = r.profiles[k];
            out << csv_field(source_id) << ',' << r.algorithm << ',' << csv_field(label) << ',' << (k + 1)
                << ',' << joined(occ.positions, ' ') << ',' << occ.gdist << ','
                << joined(prof.metric, ' ') << ',' << joined(prof.ordinal, ' ') << ','
                << prof.max_ordinal() << ','
                << (flagged(prof, r.params.limits.delta) ? "true" : "false") << '\n';
        }
    }
}

void write_text(std::ostream& out, const std::vector<SequenceReport>& reports, bool with_stats) {
    for (const auto& [source_id, r] : reports) {
        out << "# " << (source_id.empty() ? "-" : source_id) << "  " << r.algorithm << "  "
            << r.params.pattern << "  " << metric_label(r.params) << '\n';
        out << "occurrences: " << r.occ_count() << '\n';
        for (std::size_t k = 0; k < r.occurrences.size(); ++k) {
            const auto& occ = r.occurrences[k];
            out << "  <" << joined(occ.positions, ',') << ">  gdist=" << occ.gdist;
            if (flagged(r.profiles[k], r.params.limits.delta))
                out << "  max_ordinal_deviation=" << r.profiles[k].max_ordinal() << " FLAGGED";
            out << '\n';
        }
        if (with_stats) {
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(3) << elapsed_ms(r);
            out << "stats: nodes=" << r.stats.total_nodes << " edges=" << r.stats.total_edges
                << " pruned_nodes=" << r.stats.pruned_nodes
                << " pruned_edges=" << r.stats.pruned_edges << " retries=" << r.parent_retries
                << " elapsed_ms=" << ms.str() << '\n';
        }
    }
}

} // namespace gapmatch::cli
