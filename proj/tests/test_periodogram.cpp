#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "ekz/error.hpp"
#include "ekz/filter.hpp"
#include "ekz/periodogram.hpp"
#include "ekz/simulate.hpp"
#include "ekz/spectral.hpp"
#include "oracles.hpp"

using namespace ekz;

TEST_CASE("a pure tone concentrates in its own bin") {
    const std::size_t n = 256;
    const double amplitude = 2.0;
    const TimeSeries wave = gen_sinusoid(n, 8.0, amplitude, 0.0);
    const Periodogram p = periodogram(wave);

    REQUIRE(p.power.size() == n / 2 + 1);
    CHECK(p.length == n);
    CHECK(p.frequencies[n / 8] == doctest::Approx(0.125));

    const double peak = p.power[n / 8];
    CHECK(peak == doctest::Approx(n * amplitude * amplitude / 4.0).epsilon(1e-10));
    for (std::size_t j = 0; j < p.power.size(); ++j) {
        if (j == n / 8) continue;
        CHECK(p.power[j] < 1e-10 * peak);
    }
}

TEST_CASE("a constant series is pure DC") {
    const std::size_t n = 50;
    const double c = 3.0;
    const Periodogram p = periodogram(TimeSeries(std::vector<double>(n, c)));
    CHECK(p.power[0] == doctest::Approx(n * c * c).epsilon(1e-12));
    for (std::size_t j = 1; j < p.power.size(); ++j)
        CHECK(p.power[j] < 1e-9);
}

TEST_CASE("white noise is flat on average") {
    const Periodogram p = periodogram(gen_white_noise(20'000, 1.0, 3));
    double mean = 0.0;
    for (std::size_t j = 1; j < p.power.size(); ++j) mean += p.power[j];
    mean /= static_cast<double>(p.power.size() - 1);
    CHECK(mean > 0.9);
    CHECK(mean < 1.1);
}

TEST_CASE("fast transform matches the direct transform") {
    for (std::size_t n : {97u, 256u, 1000u}) {
        const TimeSeries x = gen_white_noise(n, 1.0, 17);
        const Periodogram fast = periodogram(x);
        const std::vector<double> slow = oracle::dft_periodogram(
            {x.values().begin(), x.values().end()});
        REQUIRE(fast.power.size() == slow.size());
        for (std::size_t j = 0; j < slow.size(); ++j)
            CHECK(std::abs(fast.power[j] - slow[j]) <=
                  1e-8 * std::max(1.0, slow[j]));
    }
}

TEST_CASE("two-sided power sums to the series energy") {
    for (std::size_t n : {513u, 1000u, 2048u}) {
        const TimeSeries x = gen_white_noise(n, 1.4, static_cast<std::uint64_t>(n));
        const Periodogram p = periodogram(x);

        double two_sided = p.power[0];
        const std::size_t last = p.power.size() - 1;
        for (std::size_t j = 1; j < last; ++j) two_sided += 2.0 * p.power[j];
        two_sided += (n % 2 == 0) ? p.power[last] : 2.0 * p.power[last];

        double energy = 0.0;
        for (double v : x.values()) energy += v * v;

        CHECK(std::abs(two_sided - energy) <= 1e-8 * energy);
    }
}

TEST_CASE("input preconditions") {
    CHECK_THROWS_AS(periodogram(TimeSeries(std::vector<double>{1.0})), DomainError);

    std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    std::vector<bool> mask{false, true, false, false};
    CHECK_THROWS_AS(periodogram(TimeSeries(std::move(v), std::move(mask))), DataError);
}

TEST_CASE("log periodogram") {
    SUBCASE("log of unit power is zero, zero power hits the floor") {
        Periodogram flat;
        flat.length = 8;
        flat.frequencies = {0.0, 0.125, 0.25};
        flat.power = {1.0, 0.0, 4.0};
        const Periodogram logp = log_periodogram(flat, 1e-300);
        CHECK(logp.power[0] == 0.0);
        CHECK(logp.power[1] == doctest::Approx(std::log(1e-300)));
        CHECK(logp.power[2] == doctest::Approx(std::log(4.0)));
    }

    SUBCASE("composes with the periodogram") {
        const TimeSeries x = gen_white_noise(512, 1.0, 4);
        const Periodogram direct = log_periodogram(x);
        const Periodogram composed = log_periodogram(periodogram(x));
        for (std::size_t j = 0; j < direct.power.size(); ++j)
            CHECK(direct.power[j] == composed.power[j]);
    }

    SUBCASE("floor must be positive") {
        const TimeSeries x = gen_white_noise(16, 1.0, 4);
        CHECK_THROWS_AS(log_periodogram(x, 0.0), DomainError);
    }
}

// The defining property of the transfer function: filtering scales the
// periodogram by the exact energy transfer, bin by bin. A periodic
// extension of the core keeps the identity well posed at the filter zeros.
TEST_CASE("filtering scales the spectrum by the energy transfer") {
    const std::size_t n = 10'000;
    const TimeSeries core = gen_white_noise(n, 1.0, 11);
    const CoefficientWindow window = ekz_coefficients(2.75, 2);
    const std::size_t half = static_cast<std::size_t>(window.half_width());

    std::vector<double> extended(n + 2 * half);
    for (std::size_t t = 0; t < extended.size(); ++t)
        extended[t] = core[(t + n - half) % n];
    const TimeSeries filtered =
        convolve(TimeSeries(std::move(extended)), window, BoundaryPolicy::Missing);
    const TimeSeries interior = filtered.longest_observed_segment();
    REQUIRE(interior.size() == n);

    const Periodogram raw = periodogram(core);
    const Periodogram filt = periodogram(interior);

    std::vector<double> sorted = raw.power;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];

    for (std::size_t j = 0; j < raw.power.size(); ++j) {
        if (raw.power[j] <= median) continue;
        const double expected = etf_exact_at(window, raw.frequencies[j]) * raw.power[j];
        if (expected == 0.0) continue;
        CHECK(std::abs(filt.power[j] - expected) <= 0.10 * expected);
    }
}
