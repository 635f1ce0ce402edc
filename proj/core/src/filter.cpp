#include "ekz/filter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "ekz/error.hpp"

namespace ekz {

namespace {

// m^k by plain left-to-right multiplication; exact for integer m with
// small k, deterministic everywhere.
double integer_power(double base, int exponent) {
    double result = 1.0;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

// Full linear convolution of two symmetric odd-length windows, computed for
// the left half and mirrored so the result is bitwise symmetric.
std::vector<double> convolve_symmetric(const std::vector<double>& a,
                                       const std::vector<double>& b) {
    const std::size_t n = a.size() + b.size() - 1;
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i <= (n - 1) / 2; ++i) {
        const std::size_t j_lo = (i + 1 >= b.size()) ? i + 1 - b.size() : 0;
        const std::size_t j_hi = std::min(i, a.size() - 1);
        double acc = 0.0;
        for (std::size_t j = j_lo; j <= j_hi; ++j) acc += a[j] * b[i - j];
        out[i] = acc;
        out[n - 1 - i] = acc;
    }
    return out;
}

}  // namespace

WindowDecomposition decompose_window_length(double window_length) {
    if (!std::isfinite(window_length) || window_length < 1.0)
        throw DomainError("window length must be a finite real >= 1, got " +
                          std::to_string(window_length));

    const auto floor_part = static_cast<std::int64_t>(std::floor(window_length));
    const std::int64_t odd = (floor_part % 2 == 1) ? floor_part : floor_part - 1;
    // Single subtraction, no rounding of the remainder.
    const double remainder = window_length - static_cast<double>(odd);
    return {static_cast<int>(odd), remainder};
}

FilterSpec::FilterSpec(double window_length, int iterations, BoundaryPolicy boundary)
    : window_length_(window_length),
      iterations_(iterations),
      decomposition_(decompose_window_length(window_length)),
      boundary_(boundary) {
    if (iterations < 1)
        throw DomainError("iteration count must be >= 1, got " +
                          std::to_string(iterations));
}

CoefficientWindow::CoefficientWindow(std::vector<double> weights, double normalizer,
                                     double window_length, int iterations)
    : weights_(std::move(weights)),
      normalizer_(normalizer),
      window_length_(window_length),
      iterations_(iterations) {
    if (weights_.empty() || weights_.size() % 2 == 0)
        throw DomainError("coefficient window must have odd length");
}

CoefficientWindow ekz_coefficients(double window_length, int iterations,
                                   std::size_t max_support) {
    const auto [odd_length, remainder] = decompose_window_length(window_length);
    if (iterations < 1)
        throw DomainError("iteration count must be >= 1, got " +
                          std::to_string(iterations));

    const double support_estimate =
        static_cast<double>(iterations) * (static_cast<double>(odd_length) + 1.0);
    if (support_estimate > static_cast<double>(max_support))
        throw ResourceError("filter support of " + std::to_string(support_estimate) +
                            " taps exceeds the configured maximum of " +
                            std::to_string(max_support));

    // Base window: end taps of half the remainder around the all-ones core;
    // zero end taps are trimmed so the odd-integer case keeps the classic
    // support and edge accounting.
    std::vector<double> base;
    if (remainder > 0.0) {
        base.assign(static_cast<std::size_t>(odd_length) + 2, 1.0);
        base.front() = base.back() = remainder / 2.0;
    } else {
        base.assign(static_cast<std::size_t>(odd_length), 1.0);
    }

    std::vector<double> weights = base;
    for (int pass = 1; pass < iterations; ++pass)
        weights = convolve_symmetric(weights, base);

    return CoefficientWindow(std::move(weights),
                             integer_power(window_length, iterations),
                             window_length, iterations);
}

TimeSeries convolve(const TimeSeries& x, const CoefficientWindow& window,
                    BoundaryPolicy boundary) {
    const std::size_t n = x.size();
    const int half = window.half_width();
    const std::span<const double> weights = window.weights();
    const double normalizer = window.normalizer();

    // Prefix counts of missing samples for O(1) window checks.
    std::vector<std::size_t> missing_before(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        missing_before[i + 1] = missing_before[i] + (x.missing(i) ? 1 : 0);

    std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
    std::vector<bool> out_missing(n, false);

    for (std::size_t t = 0; t < n; ++t) {
        const std::int64_t lo = static_cast<std::int64_t>(t) - half;
        const std::int64_t hi = static_cast<std::int64_t>(t) + half;
        const bool in_range = lo >= 0 && hi < static_cast<std::int64_t>(n);
        const bool complete =
            in_range && missing_before[hi + 1] - missing_before[lo] == 0;

        if (complete) {
            double acc = 0.0;
            const double* sample = x.values().data() + lo;
            for (std::size_t u = 0; u < weights.size(); ++u)
                acc += weights[u] * sample[u];
            out[t] = acc / normalizer;
            continue;
        }

        if (boundary == BoundaryPolicy::Missing) {
            out_missing[t] = true;
            continue;
        }

        // Renormalize: truncated window over the observed in-range taps.
        double acc = 0.0;
        double weight_sum = 0.0;
        const std::int64_t from = std::max<std::int64_t>(lo, 0);
        const std::int64_t to = std::min<std::int64_t>(hi, static_cast<std::int64_t>(n) - 1);
        for (std::int64_t s = from; s <= to; ++s) {
            if (x.missing(static_cast<std::size_t>(s))) continue;
            const double w = weights[static_cast<std::size_t>(s - lo)];
            acc += w * x[static_cast<std::size_t>(s)];
            weight_sum += w;
        }
        if (weight_sum > 0.0)
            out[t] = acc / weight_sum;
        else
            out_missing[t] = true;
    }

    TimeSeries result(std::move(out), std::move(out_missing));
    result.set_time_step(x.time_step());
    result.set_origin_index(x.origin_index());
    return result;
}

TimeSeries apply_direct(const TimeSeries& x, const FilterSpec& spec) {
    return convolve(x, ekz_coefficients(spec.window_length(), spec.iterations()),
                    spec.boundary());
}

TimeSeries apply_iterated(const TimeSeries& x, const FilterSpec& spec) {
    const CoefficientWindow base = ekz_coefficients(spec.window_length(), 1);
    TimeSeries result = convolve(x, base, spec.boundary());
    for (int pass = 1; pass < spec.iterations(); ++pass)
        result = convolve(result, base, spec.boundary());
    return result;
}

TimeSeries esma(const TimeSeries& x, double window_length, BoundaryPolicy boundary) {
    return apply_direct(x, FilterSpec(window_length, 1, boundary));
}

}  // namespace ekz
