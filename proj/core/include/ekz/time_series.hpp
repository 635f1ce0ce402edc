#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ekz {

/// A real-valued series on a uniform index grid with an explicit per-sample
/// missing mask. All filtering is index based; the time step is carried only
/// as a label (e.g. "6 hours" = 0.25 days). Non-missing samples are always
/// finite; missing samples store a NaN placeholder that is never read.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values);
    TimeSeries(std::vector<double> values, std::vector<bool> missing);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    bool missing(std::size_t i) const noexcept { return missing_[i]; }

    std::span<const double> values() const noexcept { return values_; }
    const std::vector<bool>& missing_mask() const noexcept { return missing_; }

    bool fully_observed() const noexcept;
    std::size_t missing_count() const noexcept;

    // Longest contiguous run of observed samples, as a new series. The run's
    // start index is reflected in origin_index(). Errors if everything is
    // missing.
    TimeSeries longest_observed_segment() const;

    double time_step() const noexcept { return time_step_; }
    void set_time_step(double dt);

    std::int64_t origin_index() const noexcept { return origin_; }
    void set_origin_index(std::int64_t origin) noexcept { origin_ = origin; }

private:
    void validate() const;

    std::vector<double> values_;
    std::vector<bool> missing_;
    double time_step_ = 1.0;
    std::int64_t origin_ = 0;
};

// True when the masks agree and all observed samples are bitwise identical.
// Used by reproducibility checks; missing placeholders are ignored.
bool identical_samples(const TimeSeries& a, const TimeSeries& b) noexcept;

}  // namespace ekz
