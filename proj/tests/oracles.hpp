// Independent brute-force reference implementations used only by tests.
// Nothing here may call into the library paths it is checking.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "ekz/time_series.hpp"

namespace ekz::oracle {

// Polynomial power expansion of the base window in long double, by naive
// full multiplication (no symmetry shortcut). Exact zero end taps (odd
// integer windows) are trimmed, mirroring the documented contract.
inline std::vector<double> polynomial_coefficients(double window_length, int k) {
    const double floor_part = std::floor(window_length);
    const long long odd = (static_cast<long long>(floor_part) % 2 == 1)
                              ? static_cast<long long>(floor_part)
                              : static_cast<long long>(floor_part) - 1;
    const long double half_end =
        (static_cast<long double>(window_length) - static_cast<long double>(odd)) / 2.0L;

    std::vector<long double> base(static_cast<std::size_t>(odd) + 2, 1.0L);
    base.front() = base.back() = half_end;

    std::vector<long double> poly{1.0L};
    for (int pass = 0; pass < k; ++pass) {
        std::vector<long double> next(poly.size() + base.size() - 1, 0.0L);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t j = 0; j < base.size(); ++j)
                next[i + j] += poly[i] * base[j];
        poly = std::move(next);
    }

    std::size_t lo = 0, hi = poly.size();
    while (lo < hi && poly[lo] == 0.0L) ++lo;
    while (hi > lo && poly[hi - 1] == 0.0L) --hi;

    std::vector<double> out;
    out.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) out.push_back(static_cast<double>(poly[i]));
    return out;
}

// Plain full linear convolution in double, left-to-right accumulation.
inline std::vector<double> convolve_full(const std::vector<double>& a,
                                         const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// One pass of the plain centered moving average of odd length m; windows
// that leave the series (or touch a missing sample) yield missing.
inline TimeSeries sma_once(const TimeSeries& x, int m) {
    const int half = (m - 1) / 2;
    const std::size_t n = x.size();
    std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
    std::vector<bool> out_missing(n, true);
    for (std::size_t t = 0; t < n; ++t) {
        const long long lo = static_cast<long long>(t) - half;
        const long long hi = static_cast<long long>(t) + half;
        if (lo < 0 || hi >= static_cast<long long>(n)) continue;
        double sum = 0.0;
        bool gap = false;
        for (long long s = lo; s <= hi; ++s) {
            if (x.missing(static_cast<std::size_t>(s))) {
                gap = true;
                break;
            }
            sum += x[static_cast<std::size_t>(s)];
        }
        if (gap) continue;
        out[t] = sum / static_cast<double>(m);
        out_missing[t] = false;
    }
    return TimeSeries(std::move(out), std::move(out_missing));
}

inline TimeSeries sma_composed(const TimeSeries& x, int m, int k) {
    TimeSeries result = sma_once(x, m);
    for (int pass = 1; pass < k; ++pass) result = sma_once(result, m);
    return result;
}

// O(n^2) discrete Fourier transform periodogram, 1/n normalization.
inline std::vector<double> dft_periodogram(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<double> power(n / 2 + 1, 0.0);
    for (std::size_t j = 0; j < power.size(); ++j) {
        long double re = 0.0L, im = 0.0L;
        for (std::size_t t = 0; t < n; ++t) {
            const long double angle = -2.0L * std::numbers::pi_v<long double> *
                                      static_cast<long double>(j) *
                                      static_cast<long double>(t) /
                                      static_cast<long double>(n);
            re += static_cast<long double>(x[t]) * std::cos(angle);
            im += static_cast<long double>(x[t]) * std::sin(angle);
        }
        power[j] = static_cast<double>((re * re + im * im) / static_cast<long double>(n));
    }
    return power;
}

// Amplitude of the dominant oscillation of an observed interior stretch,
// measured as half the value range.
inline double half_range(const TimeSeries& x) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.missing(i)) continue;
        lo = std::min(lo, x[i]);
        hi = std::max(hi, x[i]);
    }
    return (hi - lo) / 2.0;
}

}  // namespace ekz::oracle
