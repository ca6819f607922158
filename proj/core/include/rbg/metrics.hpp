#pragma once

#include "rbg/trajectory.hpp"

#include <nlohmann/json.hpp>

namespace rbg {

/// Mean and maximum absolute error over variables x recorded steps x
/// parameter points, with the location of the worst sample. The initial
/// column is excluded from the sums (both sides share it by construction).
struct ErrorReport {
    struct PerVariable {
        std::string name;
        double mae = 0.0;
        double max_ae = 0.0;
    };
    std::vector<PerVariable> variables;
    double mae = 0.0;
    double max_ae = 0.0;
    std::string max_variable;
    Index max_time_index = 0;
    Index max_point_index = 0;
    Index step_count = 0;
    Index point_count = 0;

    nlohmann::json to_json() const;
};

/// Full comparison of two trajectory sets on the named columns. Sets must
/// pair up one-to-one with identical time grids.
ErrorReport compare_trajectories(const std::vector<Trajectory>& reference,
                                 const std::vector<Trajectory>& approx,
                                 const std::vector<std::string>& variables);

double mae(const std::vector<Trajectory>& reference, const std::vector<Trajectory>& approx,
           const std::vector<std::string>& variables);

double max_ae(const std::vector<Trajectory>& reference, const std::vector<Trajectory>& approx,
              const std::vector<std::string>& variables);

} // namespace rbg
