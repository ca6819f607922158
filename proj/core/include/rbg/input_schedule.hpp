#pragma once

#include "rbg/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace rbg {

/// One named input channel: a constant or a piecewise-linear time series.
struct InputChannel {
    bool is_series = false;
    double constant = 0.0;
    std::vector<double> times;   // strictly increasing, seconds
    std::vector<double> values;

    static InputChannel from_constant(double v);
    static InputChannel from_series(std::vector<double> times, std::vector<double> values);

    /// Linear interpolation inside the knot range, clamped outside it.
    double at(double t) const;
};

/// Named input channels evaluated against model input names at each step.
class InputSchedule {
public:
    InputSchedule() = default;

    InputSchedule& set(const std::string& name, double constant);
    InputSchedule& set(const std::string& name, InputChannel channel);

    bool has(const std::string& name) const;
    double at(const std::string& name, double t) const;

    /// Evaluate the named channels at time t, in the given order.
    /// Missing channels raise rbg::Error.
    Vector values_for(const std::vector<std::string>& names, double t) const;

    /// Copy of this schedule with `overrides` channels replaced by constants.
    InputSchedule overridden(const std::map<std::string, double>& overrides) const;

    const std::map<std::string, InputChannel>& channels() const { return channels_; }

private:
    std::map<std::string, InputChannel> channels_;
};

} // namespace rbg
