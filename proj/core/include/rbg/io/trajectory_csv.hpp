#pragma once

#include "rbg/dae_model.hpp"
#include "rbg/input_schedule.hpp"
#include "rbg/trajectory.hpp"

#include <string>

namespace rbg::io {

/// CSV layout: mandatory header row, first column `time_s`, then one column
/// per named variable (states, algebraic values, inputs in that order).
/// Values are written in shortest round-trip form, so a rewrite of a parsed
/// file is byte-identical.
void write_trajectory_csv(const Trajectory& trajectory, const std::string& path);

/// Reads a trajectory CSV. Without a model, every column lands in the state
/// block under its header name.
Trajectory read_trajectory_csv(const std::string& path);

/// Reorganizes a generically read trajectory into the model's state,
/// algebraic and input blocks. All differential variables must be present;
/// algebraic and input blocks are filled only when complete.
Trajectory align_to_model(const Trajectory& trajectory, const DaeModel& model);

/// Drive-cycle ingestion: two-column CSV (time_s, value) with a header row,
/// becoming one piecewise-linear input channel.
InputChannel read_series_csv(const std::string& path);

} // namespace rbg::io
