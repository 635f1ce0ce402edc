#include "ekz/time_series.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <utility>

#include "ekz/error.hpp"

namespace ekz {

TimeSeries::TimeSeries(std::vector<double> values)
    : values_(std::move(values)), missing_(values_.size(), false) {
    validate();
}

TimeSeries::TimeSeries(std::vector<double> values, std::vector<bool> missing)
    : values_(std::move(values)), missing_(std::move(missing)) {
    validate();
    // Canonical placeholder so identical masked series are bitwise identical.
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (missing_[i]) values_[i] = std::numeric_limits<double>::quiet_NaN();
}

void TimeSeries::validate() const {
    if (values_.empty())
        throw DomainError("time series must contain at least one sample");
    if (values_.size() != missing_.size())
        throw DomainError("time series values and missing mask differ in length");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!missing_[i] && !std::isfinite(values_[i]))
            throw DomainError("non-missing sample at index " + std::to_string(i) +
                              " is not finite");
    }
}

bool TimeSeries::fully_observed() const noexcept {
    for (bool m : missing_)
        if (m) return false;
    return true;
}

std::size_t TimeSeries::missing_count() const noexcept {
    std::size_t count = 0;
    for (bool m : missing_) count += m;
    return count;
}

TimeSeries TimeSeries::longest_observed_segment() const {
    std::size_t best_start = 0, best_len = 0;
    std::size_t run_start = 0, run_len = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (missing_[i]) {
            run_len = 0;
        } else {
            if (run_len == 0) run_start = i;
            ++run_len;
            if (run_len > best_len) {
                best_len = run_len;
                best_start = run_start;
            }
        }
    }
    if (best_len == 0)
        throw DataError("series has no observed samples");

    TimeSeries segment(std::vector<double>(values_.begin() + best_start,
                                           values_.begin() + best_start + best_len));
    segment.time_step_ = time_step_;
    segment.origin_ = origin_ + static_cast<std::int64_t>(best_start);
    return segment;
}

void TimeSeries::set_time_step(double dt) {
    if (!(dt > 0) || !std::isfinite(dt))
        throw DomainError("time step must be a positive finite number");
    time_step_ = dt;
}

bool identical_samples(const TimeSeries& a, const TimeSeries& b) noexcept {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.missing(i) != b.missing(i)) return false;
        if (!a.missing(i) &&
            std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i]))
            return false;
    }
    return true;
}

}  // namespace ekz
