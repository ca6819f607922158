#pragma once

#include "rbg/dae_model.hpp"
#include "rbg/input_schedule.hpp"
#include "rbg/trajectory.hpp"

namespace rbg {

struct IntegrateOptions {
    double dt = 1.0;        // recording interval, s
    int substeps = 1;       // internal step = dt / substeps
    double alg_tol = 1e-10; // algebraic solve tolerance
};

/// Explicit-Euler propagation of the full model: at each internal step the
/// algebraic state is solved at the current instant, then the differential
/// state advances by h * derivatives. Recording happens every dt; the result
/// is deterministic for identical arguments.
///
/// A non-finite state raises an error naming the simulated time and the
/// first offending variable (the usual sign of a step-size stability
/// failure; raise `substeps`).
Trajectory integrate(const DaeModel& model, const InputSchedule& schedule, double t_end,
                     const IntegrateOptions& opts = {});

} // namespace rbg
