#include "rbg/hybrid.hpp"

#include "rbg/error.hpp"

#include <cmath>

namespace rbg {

namespace {

std::vector<std::string> pick_names(const std::vector<std::string>& all, const IndexList& idx) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (Index i : idx) out.push_back(all[static_cast<size_t>(i)]);
    return out;
}

Vector gather(const Vector& full, const IndexList& idx) {
    Vector out(static_cast<Index>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i) out[static_cast<Index>(i)] = full[idx[i]];
    return out;
}

} // namespace

std::vector<std::string> HybridArtifact::primary_names() const {
    return pick_names(model->space().diff_names, partition.primary_diff);
}
std::vector<std::string> HybridArtifact::secondary_names() const {
    return pick_names(model->space().diff_names, partition.secondary_diff);
}
std::vector<std::string> HybridArtifact::tertiary_names() const {
    return pick_names(model->space().diff_names, partition.tertiary_diff);
}

HybridArtifact build_hybrid(DaeModelPtr model, ReducedBasis basis, Partition partition,
                            LinearLayer coupling, LinearLayer reconstruction,
                            nlohmann::ordered_json model_doc, IntegrateOptions defaults) {
    partition.validate(model->diff_count(), model->alg_count());
    if (basis.modes.rows() != model->diff_count())
        throw dimension_error("basis rows", model->diff_count(), basis.modes.rows());
    if (basis.scale.size() != model->diff_count() ||
        (basis.scale - model->space().diff_scale).lpNorm<Eigen::Infinity>() > 0.0)
        throw validation_error("basis scaling does not match the model's variable scaling");
    if (basis.initial.size() != model->diff_count() ||
        (basis.initial - model->space().initial_diff).lpNorm<Eigen::Infinity>() > 0.0)
        throw validation_error("basis initial values do not match the model's");

    const Index np = static_cast<Index>(partition.primary_diff.size());
    auto check_layer = [&](const LinearLayer& layer, const IndexList& expected,
                           const char* which) {
        if (layer.outputs != expected)
            throw validation_error(std::string(which) +
                                   " layer outputs do not match the partition");
        if (layer.output_count() != static_cast<Index>(expected.size()))
            throw dimension_error(which, static_cast<Index>(expected.size()),
                                  layer.output_count());
        if (layer.output_count() > 0 && layer.input_count() != np)
            throw dimension_error("layer inputs", np, layer.input_count());
        if (layer.bias.size() != layer.output_count())
            throw dimension_error("layer bias", layer.output_count(), layer.bias.size());
    };
    check_layer(coupling, partition.secondary_diff, "coupling");
    check_layer(reconstruction, partition.tertiary_diff, "reconstruction");

    HybridArtifact art;
    art.model = std::move(model);
    art.model_doc = std::move(model_doc);
    art.partition = std::move(partition);
    art.basis = std::move(basis);
    art.coupling = std::move(coupling);
    art.reconstruction = std::move(reconstruction);
    art.defaults = defaults;
    return art;
}

Trajectory integrate_hybrid(const HybridArtifact& artifact, const InputSchedule& schedule,
                            double t_end, std::optional<IntegrateOptions> opts_in) {
    const IntegrateOptions opts = opts_in.value_or(artifact.defaults);
    if (!(opts.dt > 0.0)) throw validation_error("dt must be positive", {{"dt", opts.dt}});
    if (opts.substeps < 1)
        throw validation_error("substeps must be >= 1", {{"substeps", opts.substeps}});
    const double steps_d = t_end / opts.dt;
    const Index m = static_cast<Index>(std::llround(steps_d));
    if (m < 1 || std::abs(steps_d - static_cast<double>(m)) > 1e-9)
        throw validation_error("t_end must be a positive multiple of dt",
                               {{"t_end", t_end}, {"dt", opts.dt}});

    const DaeModel& model = *artifact.model;
    const Partition& part = artifact.partition;
    RestrictedModel restricted = artifact.restricted();
    RestrictedModel::Scratch scratch = restricted.make_scratch();

    const Index np = restricted.primary_diff_count();
    const Index ns = restricted.secondary_diff_count();
    const Index na = restricted.primary_alg_count();
    const auto& input_names = model.input_names();

    const Vector init_p = gather(model.space().initial_diff, part.primary_diff);
    const Vector init_s = gather(model.space().initial_diff, part.secondary_diff);
    const Vector scale_p = gather(model.space().diff_scale, part.primary_diff);
    const Vector scale_s = gather(model.space().diff_scale, part.secondary_diff);
    const Vector scaled_init_s = scale_s.cwiseProduct(init_s);
    const bool has_coupling = ns > 0;

    Trajectory tr;
    {
        auto names = artifact.primary_names();
        auto sec = artifact.secondary_names();
        names.insert(names.end(), sec.begin(), sec.end());
        tr.state_names = std::move(names);
    }
    tr.alg_names = pick_names(model.space().alg_names, part.primary_alg);
    tr.input_names = input_names;
    tr.time = Vector::LinSpaced(m + 1, 0.0, static_cast<double>(m) * opts.dt);
    tr.state.resize(np + ns, m + 1);
    tr.alg.resize(na, m + 1);
    tr.inputs.resize(static_cast<Index>(input_names.size()), m + 1);

    const double h = opts.dt / opts.substeps;
    double t = 0.0;
    Vector diff_p = init_p;
    Vector diff_s = init_s;
    Vector mu = schedule.values_for(input_names, t);
    Vector alg_p(na);
    restricted.solve_alg_into(diff_p, diff_s, mu, Vector::Zero(na), opts.alg_tol, scratch,
                              alg_p);
    Vector d(np);

    auto record = [&](Index k) {
        tr.state.col(k).head(np) = diff_p;
        tr.state.col(k).tail(ns) = diff_s;
        tr.alg.col(k) = alg_p;
        tr.inputs.col(k) = mu;
    };
    record(0);

    for (Index k = 1; k <= m; ++k) {
        for (int s = 0; s < opts.substeps; ++s) {
            restricted.deriv_into(diff_p, alg_p, diff_s, mu, t, scratch, d);
            diff_p += h * d;
            t = (static_cast<double>(k - 1) + static_cast<double>(s + 1) / opts.substeps) *
                opts.dt;
            if (!diff_p.allFinite())
                throw Error("nonfinite_state",
                            "reduced state became non-finite at t=" + std::to_string(t) +
                                " s; the staggered explicit step is likely unstable, raise "
                                "substeps or lower the stabilization mode count",
                            {{"time", t}});
            if (has_coupling) {
                Vector u = scale_p.cwiseProduct(diff_p - init_p);
                Vector s_off = artifact.coupling.forward(u, scaled_init_s);
                diff_s = init_s + s_off.cwiseQuotient(scale_s);
            }
            mu = schedule.values_for(input_names, t);
            restricted.solve_alg_into(diff_p, diff_s, mu, alg_p, opts.alg_tol, scratch, alg_p);
        }
        record(k);
    }
    return tr;
}

Trajectory reconstruct_tertiary(const HybridArtifact& artifact, const Trajectory& reduced,
                                bool with_alg) {
    const DaeModel& model = *artifact.model;
    const Partition& part = artifact.partition;
    const Index np = static_cast<Index>(part.primary_diff.size());
    const Index ns = static_cast<Index>(part.secondary_diff.size());
    const Index nt = static_cast<Index>(part.tertiary_diff.size());

    {
        auto expected = artifact.primary_names();
        auto sec = artifact.secondary_names();
        expected.insert(expected.end(), sec.begin(), sec.end());
        if (reduced.state_names != expected)
            throw Error("missing_column",
                        "trajectory does not carry the primary and secondary columns of "
                        "this artifact; run it through the reduced model first");
    }

    const Vector init_p = gather(model.space().initial_diff, part.primary_diff);
    const Vector init_t = gather(model.space().initial_diff, part.tertiary_diff);
    const Vector scale_p = gather(model.space().diff_scale, part.primary_diff);
    const Vector scale_t = gather(model.space().diff_scale, part.tertiary_diff);
    const Vector scaled_init_t = scale_t.cwiseProduct(init_t);

    const Index samples = reduced.sample_count();
    Trajectory out;
    out.time = reduced.time;
    out.point = reduced.point;
    out.state_names = model.space().diff_names;
    out.input_names = reduced.input_names;
    out.inputs = reduced.inputs;
    out.state.resize(model.diff_count(), samples);

    for (Index k = 0; k < samples; ++k) {
        for (Index i = 0; i < np; ++i)
            out.state(part.primary_diff[static_cast<size_t>(i)], k) = reduced.state(i, k);
        for (Index i = 0; i < ns; ++i)
            out.state(part.secondary_diff[static_cast<size_t>(i)], k) =
                reduced.state(np + i, k);
        if (nt > 0) {
            Vector u = scale_p.cwiseProduct(reduced.state.col(k).head(np) - init_p);
            Vector t_off = artifact.reconstruction.forward(u, scaled_init_t);
            Vector diff_t = init_t + t_off.cwiseQuotient(scale_t);
            for (Index i = 0; i < nt; ++i)
                out.state(part.tertiary_diff[static_cast<size_t>(i)], k) = diff_t[i];
        }
    }

    if (with_alg) {
        out.alg_names = model.space().alg_names;
        out.alg.resize(model.alg_count(), samples);
        Vector guess = Vector::Zero(model.alg_count());
        for (Index k = 0; k < samples; ++k) {
            Vector mu = reduced.inputs.col(k);
            Vector alg = model.has_explicit()
                             ? model.evaluate_explicit(out.state.col(k), mu)
                             : model.solve_algebraic(out.state.col(k), mu, guess, 1e-10);
            out.alg.col(k) = alg;
            guess = alg;
        }
    } else {
        out.alg_names = reduced.alg_names;
        out.alg = reduced.alg;
    }
    return out;
}

} // namespace rbg
