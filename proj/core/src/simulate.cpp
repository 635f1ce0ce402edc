#include "ekz/simulate.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "ekz/error.hpp"

namespace ekz {

double GaussianSource::standard_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    have_spare_ = true;
    return u * factor;
}

TimeSeries gen_white_noise(std::size_t n, double sigma, std::uint64_t seed) {
    if (n == 0) throw DomainError("white noise length must be >= 1");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw DomainError("white noise sigma must be positive and finite");

    GaussianSource source(seed);
    std::vector<double> values(n);
    for (double& v : values) v = sigma * source.standard_normal();
    return TimeSeries(std::move(values));
}

TimeSeries gen_sinusoid(std::size_t n, double period, double amplitude,
                        double phase) {
    if (n == 0) throw DomainError("sinusoid length must be >= 1");
    if (!(period > 1.0) || !std::isfinite(period))
        throw DomainError("sinusoid period must exceed one sample (got " +
                          std::to_string(period) + ")");
    if (!std::isfinite(amplitude) || !std::isfinite(phase))
        throw DomainError("sinusoid amplitude and phase must be finite");

    std::vector<double> values(n);
    const double step = 2.0 * std::numbers::pi / period;
    for (std::size_t t = 0; t < n; ++t)
        values[t] = amplitude * std::sin(step * static_cast<double>(t) + phase);
    return TimeSeries(std::move(values));
}

TimeSeries synthesize(const SimulationRecipe& recipe) {
    if (recipe.length < 2)
        throw DomainError("recipe length must be >= 2");

    std::vector<double> sum(recipe.length, 0.0);
    GaussianSource source(recipe.seed);
    for (const SignalComponent& component : recipe.components) {
        if (const auto* noise = std::get_if<WhiteNoise>(&component)) {
            if (!(noise->sigma > 0.0) || !std::isfinite(noise->sigma))
                throw DomainError("white noise sigma must be positive and finite");
            for (double& v : sum) v += noise->sigma * source.standard_normal();
        } else {
            const auto& wave = std::get<Sinusoid>(component);
            const TimeSeries s =
                gen_sinusoid(recipe.length, wave.period, wave.amplitude, wave.phase);
            for (std::size_t t = 0; t < recipe.length; ++t) sum[t] += s[t];
        }
    }
    return TimeSeries(std::move(sum));
}

ExperimentReport run_experiment(const SimulationRecipe& recipe,
                                std::size_t etf_grid_points) {
    TimeSeries raw = synthesize(recipe);
    Periodogram raw_pgram = periodogram(raw);
    Periodogram raw_log = log_periodogram(raw_pgram);
    const std::vector<double> grid = frequency_grid(etf_grid_points);

    ExperimentReport report{std::move(raw), std::move(raw_pgram), std::move(raw_log), {}};
    report.filters.reserve(recipe.filters.size());

    for (const FilterSpec& spec : recipe.filters) {
        const TimeSeries filtered = apply_direct(report.raw, spec);
        const TimeSeries interior = filtered.longest_observed_segment();
        Periodogram pgram = periodogram(interior);
        Periodogram log_pgram = log_periodogram(pgram);
        const CoefficientWindow window =
            ekz_coefficients(spec.window_length(), spec.iterations());

        report.filters.push_back(FilterRun{
            spec,
            static_cast<std::size_t>(interior.origin_index() - report.raw.origin_index()),
            interior.size(),
            std::move(pgram),
            std::move(log_pgram),
            etf_exact(window, grid),
            etf_closed_form_curve(spec, grid),
        });
    }
    return report;
}

}  // namespace ekz
