#include "ekz/periodogram.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <string>

#include "ekz/error.hpp"

namespace ekz {

namespace {

// FFTW plan creation/destruction is not thread safe; execution of distinct
// plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

Periodogram periodogram(const TimeSeries& x) {
    const std::size_t n = x.size();
    if (n < 2)
        throw DomainError("periodogram needs at least 2 samples, got " +
                          std::to_string(n));
    if (!x.fully_observed())
        throw DataError("periodogram input has " + std::to_string(x.missing_count()) +
                        " missing value(s); trim (longest_observed_segment) or fill "
                        "the series first");

    const std::size_t bins = n / 2 + 1;
    std::vector<double> input(x.values().begin(), x.values().end());
    std::vector<std::complex<double>> spectrum(bins);

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), input.data(),
                                    reinterpret_cast<fftw_complex*>(spectrum.data()),
                                    FFTW_ESTIMATE);
    }
    if (plan == nullptr)
        throw ResourceError("failed to create FFT plan for length " + std::to_string(n));
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    Periodogram result;
    result.length = n;
    result.frequencies.resize(bins);
    result.power.resize(bins);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < bins; ++j) {
        result.frequencies[j] = static_cast<double>(j) * scale;
        result.power[j] = std::norm(spectrum[j]) * scale;
    }
    return result;
}

Periodogram log_periodogram(const Periodogram& pgram, double floor) {
    if (!(floor > 0.0))
        throw DomainError("log-periodogram floor must be positive");
    Periodogram result = pgram;
    for (double& p : result.power) p = std::log(std::max(p, floor));
    return result;
}

Periodogram log_periodogram(const TimeSeries& x, double floor) {
    return log_periodogram(periodogram(x), floor);
}

}  // namespace ekz
