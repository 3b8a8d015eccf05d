#include "gapmatch/sax.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "gapmatch/error.hpp"

namespace gapmatch::sax {

std::vector<std::vector<FrameWeight>> paa_partition(std::size_t length, std::size_t segments) {
    if (segments == 0 || segments > length)
        throw ConstraintError("PAA needs 1 <= segments <= length");
    // Scale by `segments`: point i spans [i*w, (i+1)*w), frame k spans [k*n, (k+1)*n).
    const std::size_t n = length;
    const std::size_t w = segments;
    std::vector<std::vector<FrameWeight>> frames(w);
    for (std::size_t k = 0; k < w; ++k) {
        const std::size_t lo = k * n;
        const std::size_t hi = (k + 1) * n;
        for (std::size_t i = lo / w; i < n && i * w < hi; ++i) {
            const std::size_t a = std::max(lo, i * w);
            const std::size_t b = std::min(hi, (i + 1) * w);
            if (b > a)
                frames[k].push_back({i, static_cast<double>(b - a) / static_cast<double>(w)});
        }
    }
    return frames;
}

std::vector<double> z_normalize(const std::vector<double>& values) {
    std::vector<double> out(values.size(), 0.0);
    if (values.empty())
        return out;
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values)
        var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    const double sd = std::sqrt(var);
    if (!(sd > 1e-12))
        return out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out[i] = (values[i] - mean) / sd;
    return out;
}

std::vector<double> paa(const std::vector<double>& values, std::size_t segments) {
    const auto frames = paa_partition(values.size(), segments);
    const double frame_len = static_cast<double>(values.size()) / static_cast<double>(segments);
    std::vector<double> out;
    out.reserve(frames.size());
    for (const auto& frame : frames) {
        double sum = 0.0;
        for (const auto& fw : frame)
            sum += fw.weight * values[fw.index];
        out.push_back(sum / frame_len);
    }
    return out;
}

std::vector<double> breakpoints(std::size_t alphabet_size) {
    if (alphabet_size < 2)
        throw ConstraintError("SAX alphabet size must be at least 2");
    const boost::math::normal_distribution<double> standard(0.0, 1.0);
    std::vector<double> cuts;
    cuts.reserve(alphabet_size - 1);
    for (std::size_t k = 1; k < alphabet_size; ++k) {
        const double p = static_cast<double>(k) / static_cast<double>(alphabet_size);
        // The middle cut of an even alphabet is exactly 0.
        cuts.push_back(2 * k == alphabet_size ? 0.0 : boost::math::quantile(standard, p));
    }
    return cuts;
}

std::size_t region(double value, const std::vector<double>& cuts) {
    return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), value) -
                                    cuts.begin());
}

RankedSequence symbolize(const TimeSeries& series, std::size_t segments,
                         std::size_t alphabet_size) {
    if (alphabet_size < 2 || alphabet_size > 26)
        throw ConstraintError("SAX alphabet size must be in 2..26");
    if (segments < 1 || segments > series.values.size())
        throw ConstraintError("SAX needs 1 <= segments <= series length (" +
                              std::to_string(series.values.size()) + ")");
    const auto cuts = breakpoints(alphabet_size);
    const auto means = paa(z_normalize(series.values), segments);
    const auto alphabet = Alphabet::uppercase_prefix(alphabet_size);

    RankedSequence seq;
    seq.source_id = series.label;
    seq.symbols.reserve(means.size());
    seq.ranks.reserve(means.size());
    for (double v : means) {
        const auto r = static_cast<std::int32_t>(region(v, cuts));
        seq.symbols.push_back(alphabet.symbol(r));
        seq.ranks.push_back(r);
    }
    return seq;
}

} // namespace gapmatch::sax
