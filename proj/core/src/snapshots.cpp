#include "rbg/snapshots.hpp"

#include "rbg/error.hpp"

namespace rbg {

SnapshotMatrix assemble_snapshots(const std::vector<Trajectory>& trajectories,
                                  const VariableSpace& space) {
    if (trajectories.empty())
        throw validation_error("snapshot assembly needs at least one trajectory");

    const Index nd = space.diff_count();
    const Trajectory& first = trajectories.front();
    for (size_t p = 0; p < trajectories.size(); ++p) {
        const Trajectory& tr = trajectories[p];
        if (tr.state.rows() != nd)
            throw dimension_error("trajectory state rows", nd, tr.state.rows());
        if (tr.state_names != space.diff_names)
            throw validation_error("trajectory variable names do not match the model",
                                   {{"trajectory", p}});
        if (tr.time.size() != first.time.size() ||
            (tr.time - first.time).lpNorm<Eigen::Infinity>() > 1e-12)
            throw validation_error("trajectories must share the same time grid",
                                   {{"trajectory", p}});
        if ((tr.state.col(0) - space.initial_diff).lpNorm<Eigen::Infinity>() > 1e-12)
            throw validation_error("trajectory initial state differs from the model's",
                                   {{"trajectory", p}});
    }

    const Index m = first.step_count();
    if (m < 1) throw validation_error("trajectories must contain at least one step");

    SnapshotMatrix snap;
    snap.scale = space.diff_scale;
    snap.initial = space.initial_diff;
    snap.data.resize(nd, static_cast<Index>(trajectories.size()) * m);
    snap.point_of.reserve(static_cast<size_t>(snap.data.cols()));
    snap.time_of.reserve(static_cast<size_t>(snap.data.cols()));

    Index col = 0;
    for (size_t p = 0; p < trajectories.size(); ++p) {
        const Matrix& st = trajectories[p].state;
        for (Index k = 1; k <= m; ++k, ++col) {
            snap.data.col(col) = snap.scale.cwiseProduct(st.col(k) - snap.initial);
            snap.point_of.push_back(static_cast<Index>(p));
            snap.time_of.push_back(k);
        }
    }
    return snap;
}

} // namespace rbg
