#pragma once

#include <cstddef>
#include <vector>

#include "ekz/time_series.hpp"

namespace ekz {

/// Sample spectrum at the Fourier frequencies j/n, j = 0..floor(n/2), with
/// the 1/n normalization: I(j/n) = |sum_t x_t exp(-2 pi i j t / n)|^2 / n.
/// The mean is not removed; bin 0 carries it. Under this convention the
/// two-sided power sum equals sum_t x_t^2 (Parseval).
struct Periodogram {
    std::vector<double> frequencies;
    std::vector<double> power;
    std::size_t length = 0;  // series length n the estimate was computed from
};

// Requires a fully observed series of length >= 2; callers with gaps should
// trim (e.g. TimeSeries::longest_observed_segment) or fill first.
Periodogram periodogram(const TimeSeries& x);

inline constexpr double kDefaultLogFloor = 1e-300;

// Natural log of max(power, floor) per bin; the floor keeps exact-zero bins
// representable in output files.
Periodogram log_periodogram(const TimeSeries& x, double floor = kDefaultLogFloor);
Periodogram log_periodogram(const Periodogram& pgram, double floor = kDefaultLogFloor);

}  // namespace ekz
