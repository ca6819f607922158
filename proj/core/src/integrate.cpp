#include "rbg/integrate.hpp"

#include "rbg/error.hpp"

#include <cmath>

namespace rbg {

namespace {

void check_finite(const Vector& v, const std::vector<std::string>& names, double t,
                  const char* kind) {
    if (v.allFinite()) return;
    for (Index i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i]))
            throw Error("nonfinite_state",
                        std::string(kind) + " variable '" + names[static_cast<size_t>(i)] +
                            "' became non-finite at t=" + std::to_string(t) +
                            " s; the explicit step is likely unstable, raise substeps",
                        {{"variable", names[static_cast<size_t>(i)]}, {"time", t}});
}

} // namespace

Trajectory integrate(const DaeModel& model, const InputSchedule& schedule, double t_end,
                     const IntegrateOptions& opts) {
    if (!(opts.dt > 0.0)) throw validation_error("dt must be positive", {{"dt", opts.dt}});
    if (opts.substeps < 1)
        throw validation_error("substeps must be >= 1", {{"substeps", opts.substeps}});
    const double steps_d = t_end / opts.dt;
    const Index m = static_cast<Index>(std::llround(steps_d));
    if (m < 1 || std::abs(steps_d - static_cast<double>(m)) > 1e-9)
        throw validation_error("t_end must be a positive multiple of dt",
                               {{"t_end", t_end}, {"dt", opts.dt}});

    const Index nd = model.diff_count();
    const Index na = model.alg_count();
    const auto& names = model.input_names();

    Trajectory tr;
    tr.state_names = model.space().diff_names;
    tr.alg_names = model.space().alg_names;
    tr.input_names = names;
    tr.time = Vector::LinSpaced(m + 1, 0.0, static_cast<double>(m) * opts.dt);
    tr.state.resize(nd, m + 1);
    tr.alg.resize(na, m + 1);
    tr.inputs.resize(static_cast<Index>(names.size()), m + 1);

    const double h = opts.dt / opts.substeps;
    double t = 0.0;
    Vector diff = model.space().initial_diff;
    Vector mu = schedule.values_for(names, t);
    Vector alg = model.solve_algebraic(diff, mu, Vector::Zero(na), opts.alg_tol);

    tr.state.col(0) = diff;
    tr.alg.col(0) = alg;
    tr.inputs.col(0) = mu;

    for (Index k = 1; k <= m; ++k) {
        for (int s = 0; s < opts.substeps; ++s) {
            diff += h * model.derivatives(diff, alg, mu, t);
            t = (static_cast<double>(k - 1) + static_cast<double>(s + 1) / opts.substeps) *
                opts.dt;
            check_finite(diff, tr.state_names, t, "differential");
            mu = schedule.values_for(names, t);
            alg = model.solve_algebraic(diff, mu, alg, opts.alg_tol);
            check_finite(alg, tr.alg_names, t, "algebraic");
        }
        tr.state.col(k) = diff;
        tr.alg.col(k) = alg;
        tr.inputs.col(k) = mu;
    }
    return tr;
}

} // namespace rbg
