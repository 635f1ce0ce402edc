#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "ekz/filter.hpp"
#include "ekz/periodogram.hpp"
#include "ekz/spectral.hpp"
#include "ekz/time_series.hpp"

namespace ekz {

/// Deterministic Gaussian stream. The generator is pinned for
/// reproducibility of fixtures and must not change:
///   - engine: std::mt19937_64 seeded directly with the 64-bit seed;
///   - uniforms: top 53 bits of each draw, scaled to [0, 1);
///   - normals: Marsaglia polar method; each accepted pair yields two
///     deviates, the u-coordinate one first, the v-coordinate one cached.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double standard_normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

struct WhiteNoise {
    double sigma = 1.0;
};

struct Sinusoid {
    double period;  // samples per cycle, > 1
    double amplitude = 1.0;
    double phase = 0.0;  // radians
};

using SignalComponent = std::variant<WhiteNoise, Sinusoid>;

/// A fully deterministic experiment description: identical recipes produce
/// bitwise-identical series and reports.
struct SimulationRecipe {
    std::size_t length = 20'000;
    std::uint64_t seed = 1;
    std::vector<SignalComponent> components;
    std::vector<FilterSpec> filters;
};

/// n independent Gaussian(0, sigma^2) samples from GaussianSource(seed).
TimeSeries gen_white_noise(std::size_t n, double sigma, std::uint64_t seed);

/// x_t = amplitude * sin(2 pi t / period + phase), t = 0..n-1.
/// Periods at or below one sample sit above Nyquist and are rejected.
TimeSeries gen_sinusoid(std::size_t n, double period, double amplitude,
                        double phase);

/// Component sum for a recipe. One Gaussian stream seeded with recipe.seed
/// is consumed by the noise components in declaration order.
TimeSeries synthesize(const SimulationRecipe& recipe);

struct FilterRun {
    FilterSpec spec;
    std::size_t interior_offset;  // start of the fully observed segment
    std::size_t interior_length;
    Periodogram pgram;      // of the fully observed interior segment
    Periodogram log_pgram;
    TransferCurve exact;
    TransferCurve closed;
};

struct ExperimentReport {
    TimeSeries raw;
    Periodogram raw_pgram;
    Periodogram raw_log_pgram;
    std::vector<FilterRun> filters;
};

/// Synthesizes the recipe, applies each filter independently to the raw
/// series, and collects raw/filtered periodograms plus both transfer curves
/// per filter as plot-ready data. A pure function of the recipe.
ExperimentReport run_experiment(const SimulationRecipe& recipe,
                                std::size_t etf_grid_points = 1024);

}  // namespace ekz
