#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ekz/filter.hpp"

namespace ekz {

enum class TransferKind {
    ClosedForm,             // sine-ratio formula; exact only for odd integer windows
    ExactFromCoefficients,  // squared frequency response of the actual weights
};

/// Energy transfer values on a frequency grid over [0, 0.5] cycles/sample.
struct TransferCurve {
    std::vector<double> frequencies;
    std::vector<double> values;
    TransferKind kind;
    FilterSpec spec;
};

/// points evenly spaced frequencies covering [0, 0.5] inclusive.
std::vector<double> frequency_grid(std::size_t points = 1024);

/// Closed-form energy transfer (sin(pi m f) / (m sin(pi f)))^(2k) with the
/// f -> 0 limit defined as 1. Exact for odd integer window lengths,
/// approximate otherwise. f must lie in [0, 0.5].
double etf_closed_form(double window_length, int iterations, double frequency);

TransferCurve etf_closed_form_curve(const FilterSpec& spec,
                                    std::span<const double> grid);

/// Exact energy transfer of a coefficient window at one frequency:
/// the squared cosine sum of the normalized weights (real, by symmetry).
double etf_exact_at(const CoefficientWindow& window, double frequency);

TransferCurve etf_exact(const CoefficientWindow& window,
                        std::span<const double> grid);

/// Approximate half-power cutoff frequency
/// sqrt(6)/pi * sqrt((1 - (1/2)^(1/2k)) / (m^2 - (1/2)^(1/2k))).
/// The identity filter (window length 1) has no cutoff and is rejected.
double cutoff_half_power(double window_length, int iterations);

}  // namespace ekz
