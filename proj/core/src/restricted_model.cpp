#include "rbg/restricted_model.hpp"

#include "rbg/error.hpp"

#include <cmath>
#include <limits>

namespace rbg {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_length(const char* name, Index expected, Index actual) {
    if (expected != actual) throw dimension_error(name, expected, actual);
}
} // namespace

RestrictedModel::RestrictedModel(DaeModelPtr model, Partition partition)
    : model_(std::move(model)), partition_(std::move(partition)) {
    partition_.validate(model_->diff_count(), model_->alg_count());
}

RestrictedModel restrict_model(DaeModelPtr model, Partition partition) {
    return RestrictedModel(std::move(model), std::move(partition));
}

RestrictedModel::Scratch RestrictedModel::make_scratch() const {
    return Scratch{Vector::Constant(model_->diff_count(), kNaN),
                   Vector::Constant(model_->alg_count(), kNaN)};
}

void RestrictedModel::scatter(const Vector& primary_diff, const Vector& secondary_diff,
                              Scratch& scratch) const {
    check_length("primary_diff", primary_diff_count(), primary_diff.size());
    check_length("secondary_diff", secondary_diff_count(), secondary_diff.size());
    for (size_t i = 0; i < partition_.primary_diff.size(); ++i)
        scratch.diff[partition_.primary_diff[i]] = primary_diff[static_cast<Index>(i)];
    for (size_t i = 0; i < partition_.secondary_diff.size(); ++i)
        scratch.diff[partition_.secondary_diff[i]] = secondary_diff[static_cast<Index>(i)];
}

void RestrictedModel::deriv_into(const Vector& primary_diff, const Vector& primary_alg,
                                 const Vector& secondary_diff, const Vector& inputs, double t,
                                 Scratch& scratch, Vector& out) const {
    check_length("primary_alg", primary_alg_count(), primary_alg.size());
    check_length("out", primary_diff_count(), out.size());
    scatter(primary_diff, secondary_diff, scratch);
    for (size_t i = 0; i < partition_.primary_alg.size(); ++i)
        scratch.alg[partition_.primary_alg[i]] = primary_alg[static_cast<Index>(i)];
    const auto& rows = model_->deriv_rows();
    for (size_t i = 0; i < partition_.primary_diff.size(); ++i)
        out[static_cast<Index>(i)] =
            rows[static_cast<size_t>(partition_.primary_diff[i])](scratch.diff, scratch.alg,
                                                                  inputs, t);
}

void RestrictedModel::resid_into(const Vector& primary_diff, const Vector& primary_alg,
                                 const Vector& secondary_diff, const Vector& inputs,
                                 Scratch& scratch, Vector& out) const {
    check_length("primary_alg", primary_alg_count(), primary_alg.size());
    check_length("out", primary_alg_count(), out.size());
    scatter(primary_diff, secondary_diff, scratch);
    for (size_t i = 0; i < partition_.primary_alg.size(); ++i)
        scratch.alg[partition_.primary_alg[i]] = primary_alg[static_cast<Index>(i)];
    const auto& rows = model_->resid_rows();
    for (size_t i = 0; i < partition_.primary_alg.size(); ++i)
        out[static_cast<Index>(i)] =
            rows[static_cast<size_t>(partition_.primary_alg[i])](scratch.diff, scratch.alg,
                                                                 inputs);
}

void RestrictedModel::solve_alg_into(const Vector& primary_diff, const Vector& secondary_diff,
                                     const Vector& inputs, const Vector& guess, double tol,
                                     Scratch& scratch, Vector& out,
                                     const NewtonOptions& opts) const {
    if (!(tol > 0.0)) throw validation_error("tolerance must be positive", {{"tol", tol}});
    const Index np = primary_alg_count();
    check_length("out", np, out.size());
    scatter(primary_diff, secondary_diff, scratch);

    if (model_->has_explicit()) {
        // retained rows only read retained algebraic variables (guaranteed by
        // classification), so ascending evaluation stays within the kept set
        const auto& rows = model_->explicit_rows();
        scratch.alg.setConstant(kNaN);
        for (size_t i = 0; i < partition_.primary_alg.size(); ++i) {
            Index k = partition_.primary_alg[i];
            scratch.alg[k] = rows[static_cast<size_t>(k)](scratch.diff, scratch.alg, inputs);
            out[static_cast<Index>(i)] = scratch.alg[k];
        }
        return;
    }

    check_length("guess", np, guess.size());
    Vector alg = guess;
    Scratch& ws = scratch;
    auto resid_at = [&](const Vector& a) {
        Vector r(np);
        for (size_t i = 0; i < partition_.primary_alg.size(); ++i)
            ws.alg[partition_.primary_alg[i]] = a[static_cast<Index>(i)];
        const auto& rows = model_->resid_rows();
        for (size_t i = 0; i < partition_.primary_alg.size(); ++i)
            r[static_cast<Index>(i)] =
                rows[static_cast<size_t>(partition_.primary_alg[i])](ws.diff, ws.alg, inputs);
        return r;
    };

    Vector f = resid_at(alg);
    double fnorm = f.lpNorm<Eigen::Infinity>();
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (fnorm <= tol) { out = alg; return; }
        Matrix jac(np, np);
        const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
        Vector probe = alg;
        for (Index j = 0; j < np; ++j) {
            double h = sqrt_eps * std::max(1.0, std::abs(alg[j]));
            probe[j] = alg[j] + h;
            jac.col(j) = (resid_at(probe) - f) / h;
            probe[j] = alg[j];
        }
        Vector step = jac.partialPivLu().solve(-f);
        double lambda = 1.0;
        Vector cand;
        Vector fc;
        double cnorm = std::numeric_limits<double>::infinity();
        for (int h = 0; h <= opts.max_halvings; ++h) {
            cand = alg + lambda * step;
            fc = resid_at(cand);
            cnorm = fc.allFinite() ? fc.lpNorm<Eigen::Infinity>()
                                   : std::numeric_limits<double>::infinity();
            if (cnorm < fnorm) break;
            lambda *= 0.5;
        }
        if (!(cnorm < fnorm))
            throw Error("algebraic_nonconvergence",
                        "damped Newton stalled on the retained residual rows",
                        {{"residual_norm", fnorm}, {"tol", tol}});
        alg = cand;
        f = fc;
        fnorm = cnorm;
    }
    if (fnorm <= tol) { out = alg; return; }
    throw Error("algebraic_nonconvergence",
                "Newton did not converge on the retained residual rows",
                {{"residual_norm", fnorm}, {"tol", tol}});
}

Vector RestrictedModel::deriv(const Vector& primary_diff, const Vector& primary_alg,
                              const Vector& secondary_diff, const Vector& inputs,
                              double t) const {
    Scratch s = make_scratch();
    Vector out(primary_diff_count());
    deriv_into(primary_diff, primary_alg, secondary_diff, inputs, t, s, out);
    return out;
}

Vector RestrictedModel::resid(const Vector& primary_diff, const Vector& primary_alg,
                              const Vector& secondary_diff, const Vector& inputs) const {
    Scratch s = make_scratch();
    Vector out(primary_alg_count());
    resid_into(primary_diff, primary_alg, secondary_diff, inputs, s, out);
    return out;
}

Vector RestrictedModel::solve_alg(const Vector& primary_diff, const Vector& secondary_diff,
                                  const Vector& inputs, const Vector& guess, double tol) const {
    Scratch s = make_scratch();
    Vector out(primary_alg_count());
    solve_alg_into(primary_diff, secondary_diff, inputs, guess, tol, s, out);
    return out;
}

} // namespace rbg
