#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ekz/time_series.hpp"

namespace ekz {

/// What to do where the filter window does not fit inside the series (or
/// overlaps missing samples).
enum class BoundaryPolicy {
    Missing,      // emit a missing sample (default; bias free)
    Renormalize,  // average the observed in-range taps, dividing by their weight sum
};

struct WindowDecomposition {
    int odd_length;    // greatest odd integer <= window length
    double remainder;  // window length minus odd_length, in [0, 2)
};

/// Splits a real window length m >= 1 into its odd integer part and the
/// real remainder. Odd integers decompose with remainder zero, so the
/// classic odd-window filter falls out as a special case.
WindowDecomposition decompose_window_length(double window_length);

/// A filter request: real window length m >= 1, iteration count k >= 1,
/// and the boundary policy. The odd/remainder decomposition is computed on
/// construction. window_length == 1 is the identity filter.
class FilterSpec {
public:
    FilterSpec(double window_length, int iterations,
               BoundaryPolicy boundary = BoundaryPolicy::Missing);

    double window_length() const noexcept { return window_length_; }
    int iterations() const noexcept { return iterations_; }
    int odd_length() const noexcept { return decomposition_.odd_length; }
    double remainder() const noexcept { return decomposition_.remainder; }
    BoundaryPolicy boundary() const noexcept { return boundary_; }

private:
    double window_length_;
    int iterations_;
    WindowDecomposition decomposition_;
    BoundaryPolicy boundary_;
};

inline constexpr std::size_t kDefaultMaxSupport = 10'000'000;

/// Symmetric tapering weights a_u on integer offsets u in [-H, +H], together
/// with the normalizer m^k that makes them average weights. Weights are built
/// mirrored, so a_u == a_{-u} holds bitwise.
class CoefficientWindow {
public:
    CoefficientWindow(std::vector<double> weights, double normalizer,
                      double window_length, int iterations);

    int half_width() const noexcept { return static_cast<int>(weights_.size() / 2); }
    std::span<const double> weights() const noexcept { return weights_; }

    // a_u for u in [-H, +H].
    double weight(int offset) const noexcept {
        return weights_[static_cast<std::size_t>(offset + half_width())];
    }

    double normalizer() const noexcept { return normalizer_; }
    double window_length() const noexcept { return window_length_; }
    int iterations() const noexcept { return iterations_; }

private:
    std::vector<double> weights_;  // index 0 holds offset -H
    double normalizer_;
    double window_length_;
    int iterations_;
};

/// Weights of the k-fold self-convolution of the base window
/// {m_d/2, 1, ..., 1, m_d/2} (the all-ones window of the odd part when the
/// remainder is zero; zero end taps are trimmed so the support matches the
/// classic filter exactly). Rejects supports wider than max_support taps.
CoefficientWindow ekz_coefficients(double window_length, int iterations,
                                   std::size_t max_support = kDefaultMaxSupport);

/// One weighted pass of an arbitrary symmetric window. Full in-range windows
/// with no missing taps divide by window.normalizer(); everything else
/// follows the boundary policy.
TimeSeries convolve(const TimeSeries& x, const CoefficientWindow& window,
                    BoundaryPolicy boundary);

/// Applies the filter in direct form: one pass of the full k-iteration
/// coefficient window. Output length equals input length.
TimeSeries apply_direct(const TimeSeries& x, const FilterSpec& spec);

/// Applies the filter in iterated form: k sequential passes of the base
/// window. Agrees with apply_direct on fully observed data under the
/// Missing policy (within accumulated rounding).
TimeSeries apply_iterated(const TimeSeries& x, const FilterSpec& spec);

/// Extended simple moving average: single pass, any real window length.
TimeSeries esma(const TimeSeries& x, double window_length,
                BoundaryPolicy boundary = BoundaryPolicy::Missing);

}  // namespace ekz
