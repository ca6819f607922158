#pragma once

#include "rbg/trajectory.hpp"
#include "rbg/variable_space.hpp"

#include <vector>

namespace rbg {

/// Scaled offset snapshot matrix: entry (i, j) holds
/// scale_i * (state_i(t_k, point_p) - state_i(0)) with column j spanning all
/// recorded instants k = 1..m of all trajectories p in order. The initial
/// column is excluded since its offsets are identically zero.
struct SnapshotMatrix {
    Matrix data;                 // diff_count x (points * m)
    std::vector<Index> point_of; // column -> trajectory index
    std::vector<Index> time_of;  // column -> time index k (1-based sample)
    Vector scale;
    Vector initial;

    Index column_count() const { return data.cols(); }
};

/// Stacks trajectories into a snapshot matrix. All trajectories must share
/// the time grid, the variable ordering of `space`, and the initial state.
SnapshotMatrix assemble_snapshots(const std::vector<Trajectory>& trajectories,
                                  const VariableSpace& space);

} // namespace rbg
