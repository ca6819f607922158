#include "rbg/input_schedule.hpp"

#include "rbg/error.hpp"

#include <algorithm>

namespace rbg {

InputChannel InputChannel::from_constant(double v) {
    InputChannel c;
    c.is_series = false;
    c.constant = v;
    return c;
}

InputChannel InputChannel::from_series(std::vector<double> times, std::vector<double> values) {
    if (times.empty() || times.size() != values.size())
        throw validation_error("time series needs matching, non-empty time and value arrays");
    for (size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw validation_error("time series must be strictly increasing in time",
                                   {{"index", i}, {"time", times[i]}});
    InputChannel c;
    c.is_series = true;
    c.times = std::move(times);
    c.values = std::move(values);
    return c;
}

double InputChannel::at(double t) const {
    if (!is_series) return constant;
    if (t <= times.front()) return values.front();
    if (t >= times.back()) return values.back();
    auto it = std::upper_bound(times.begin(), times.end(), t);
    size_t hi = static_cast<size_t>(it - times.begin());
    size_t lo = hi - 1;
    double w = (t - times[lo]) / (times[hi] - times[lo]);
    return values[lo] + w * (values[hi] - values[lo]);
}

InputSchedule& InputSchedule::set(const std::string& name, double constant) {
    channels_[name] = InputChannel::from_constant(constant);
    return *this;
}

InputSchedule& InputSchedule::set(const std::string& name, InputChannel channel) {
    channels_[name] = std::move(channel);
    return *this;
}

bool InputSchedule::has(const std::string& name) const { return channels_.count(name) > 0; }

double InputSchedule::at(const std::string& name, double t) const {
    auto it = channels_.find(name);
    if (it == channels_.end())
        throw Error("missing_channel", "input channel '" + name + "' is not defined",
                    {{"channel", name}});
    return it->second.at(t);
}

Vector InputSchedule::values_for(const std::vector<std::string>& names, double t) const {
    Vector v(static_cast<Index>(names.size()));
    for (size_t i = 0; i < names.size(); ++i) v[static_cast<Index>(i)] = at(names[i], t);
    return v;
}

InputSchedule InputSchedule::overridden(const std::map<std::string, double>& overrides) const {
    InputSchedule s = *this;
    for (const auto& [name, value] : overrides) s.set(name, value);
    return s;
}

} // namespace rbg
