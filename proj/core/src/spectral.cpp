#include "ekz/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ekz/error.hpp"

namespace ekz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDcEpsilon = 1e-12;  // below this the removable limit applies

double integer_power(double base, int exponent) {
    double result = 1.0;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

void check_frequency(double frequency) {
    if (!(frequency >= 0.0) || frequency > 0.5)
        throw DomainError("frequency must lie in [0, 0.5] cycles/sample, got " +
                          std::to_string(frequency));
}

}  // namespace

std::vector<double> frequency_grid(std::size_t points) {
    if (points < 2) throw DomainError("frequency grid needs at least 2 points");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = 0.5 * static_cast<double>(i) / static_cast<double>(points - 1);
    return grid;
}

double etf_closed_form(double window_length, int iterations, double frequency) {
    decompose_window_length(window_length);  // validates the window length
    if (iterations < 1)
        throw DomainError("iteration count must be >= 1");
    check_frequency(frequency);

    if (frequency < kDcEpsilon) return 1.0;
    const double ratio = std::sin(kPi * window_length * frequency) /
                         (window_length * std::sin(kPi * frequency));
    return integer_power(ratio * ratio, iterations);
}

TransferCurve etf_closed_form_curve(const FilterSpec& spec,
                                    std::span<const double> grid) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        values[i] = etf_closed_form(spec.window_length(), spec.iterations(), grid[i]);
    return {std::vector<double>(grid.begin(), grid.end()), std::move(values),
            TransferKind::ClosedForm, spec};
}

double etf_exact_at(const CoefficientWindow& window, double frequency) {
    check_frequency(frequency);
    const int half = window.half_width();
    // Weights are symmetric, so the response is the real cosine sum.
    double acc = window.weight(0);
    for (int u = 1; u <= half; ++u)
        acc += 2.0 * window.weight(u) * std::cos(2.0 * kPi * frequency * u);
    const double response = acc / window.normalizer();
    return response * response;
}

TransferCurve etf_exact(const CoefficientWindow& window,
                        std::span<const double> grid) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        values[i] = etf_exact_at(window, grid[i]);
    return {std::vector<double>(grid.begin(), grid.end()), std::move(values),
            TransferKind::ExactFromCoefficients,
            FilterSpec(window.window_length(), window.iterations())};
}

double cutoff_half_power(double window_length, int iterations) {
    decompose_window_length(window_length);
    if (iterations < 1)
        throw DomainError("iteration count must be >= 1");
    if (window_length == 1.0)
        throw DomainError("the identity filter (window length 1) has no half-power point");

    const double half_root = std::pow(0.5, 1.0 / (2.0 * iterations));
    return std::sqrt(6.0) / kPi *
           std::sqrt((1.0 - half_root) /
                     (window_length * window_length - half_root));
}

}  // namespace ekz
