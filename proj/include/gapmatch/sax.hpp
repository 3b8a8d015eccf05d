#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gapmatch/ingestion.hpp"
#include "gapmatch/sequence.hpp"

namespace gapmatch::sax {

/// Contribution of input point `index` to a frame, as a fraction of that point.
struct FrameWeight {
    std::size_t index;
    double weight;
};

/// Splits `length` points into `segments` equal-width frames. A point straddling a frame
/// boundary is shared between the two frames in proportion to its overlap, so every point's
/// weights sum to exactly 1.
std::vector<std::vector<FrameWeight>> paa_partition(std::size_t length, std::size_t segments);

/// Mean-zero, unit (population) standard deviation copy of `values`. A series with zero
/// variance maps to all zeros.
std::vector<double> z_normalize(const std::vector<double>& values);

/// Frame means under paa_partition.
std::vector<double> paa(const std::vector<double>& values, std::size_t segments);

/// The alphabet_size - 1 standard-normal quantiles splitting the line into equiprobable
/// regions, ascending.
std::vector<double> breakpoints(std::size_t alphabet_size);

/// Region index of `value`: the number of breakpoints strictly below it. A value equal to a
/// breakpoint falls in the lower region.
std::size_t region(double value, const std::vector<double>& cuts);

/// z-normalise, average into `segments` frames, and bin each frame mean into one of the
/// first `alphabet_size` uppercase letters.
///
/// Throws ConstraintError unless 1 <= segments <= values.size() and
/// 2 <= alphabet_size <= 26.
RankedSequence symbolize(const TimeSeries& series, std::size_t segments,
                         std::size_t alphabet_size);

} // namespace gapmatch::sax
