#include "rbg/dae_model.hpp"

#include "rbg/error.hpp"

#include <cmath>
#include <limits>

namespace rbg {

namespace {

void check_length(const char* name, Index expected, Index actual) {
    if (expected != actual) throw dimension_error(name, expected, actual);
}

} // namespace

Vector DaeModel::derivatives(const Vector& diff, const Vector& alg, const Vector& inputs,
                             double t) const {
    check_length("diff", diff_count(), diff.size());
    check_length("alg", alg_count(), alg.size());
    check_length("inputs", static_cast<Index>(input_names_.size()), inputs.size());
    Vector out(diff_count());
    for (Index i = 0; i < diff_count(); ++i)
        out[i] = deriv_rows_[static_cast<size_t>(i)](diff, alg, inputs, t);
    return out;
}

Vector DaeModel::residuals(const Vector& diff, const Vector& alg, const Vector& inputs) const {
    check_length("diff", diff_count(), diff.size());
    check_length("alg", alg_count(), alg.size());
    check_length("inputs", static_cast<Index>(input_names_.size()), inputs.size());
    Vector out(alg_count());
    for (Index k = 0; k < alg_count(); ++k)
        out[k] = resid_rows_[static_cast<size_t>(k)](diff, alg, inputs);
    return out;
}

Vector DaeModel::evaluate_explicit(const Vector& diff, const Vector& inputs) const {
    if (!has_explicit())
        throw Error("no_explicit_map", "model does not define explicit algebraic rows");
    check_length("diff", diff_count(), diff.size());
    check_length("inputs", static_cast<Index>(input_names_.size()), inputs.size());
    Vector alg = Vector::Constant(alg_count(), std::numeric_limits<double>::quiet_NaN());
    for (Index k = 0; k < alg_count(); ++k)
        alg[k] = explicit_rows_[static_cast<size_t>(k)](diff, alg, inputs);
    return alg;
}

Vector DaeModel::solve_algebraic(const Vector& diff, const Vector& inputs, const Vector& guess,
                                 double tol, const NewtonOptions& opts) const {
    if (!(tol > 0.0)) throw validation_error("tolerance must be positive", {{"tol", tol}});
    if (has_explicit()) return evaluate_explicit(diff, inputs);

    check_length("guess", alg_count(), guess.size());
    const Index n = alg_count();
    Vector alg = guess;
    Vector f = residuals(diff, alg, inputs);
    double fnorm = f.lpNorm<Eigen::Infinity>();

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (fnorm <= tol) return alg;

        // forward-difference Jacobian
        Matrix jac(n, n);
        Vector probe = alg;
        const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
        for (Index j = 0; j < n; ++j) {
            double h = sqrt_eps * std::max(1.0, std::abs(alg[j]));
            probe[j] = alg[j] + h;
            Vector fp = residuals(diff, probe, inputs);
            jac.col(j) = (fp - f) / h;
            probe[j] = alg[j];
        }

        Vector step = jac.partialPivLu().solve(-f);
        if (!step.allFinite())
            throw Error("algebraic_nonconvergence",
                        "Newton step is not finite; residual rows may be structurally singular",
                        {{"residual_norm", fnorm}});

        // damped update: halve until the residual norm actually drops
        double lambda = 1.0;
        Vector cand;
        Vector fc;
        double cnorm = std::numeric_limits<double>::infinity();
        for (int h = 0; h <= opts.max_halvings; ++h) {
            cand = alg + lambda * step;
            fc = residuals(diff, cand, inputs);
            cnorm = fc.allFinite() ? fc.lpNorm<Eigen::Infinity>()
                                   : std::numeric_limits<double>::infinity();
            if (cnorm < fnorm) break;
            lambda *= 0.5;
        }
        if (!(cnorm < fnorm))
            throw Error("algebraic_nonconvergence",
                        "damped Newton stalled before reaching tolerance",
                        {{"residual_norm", fnorm}, {"tol", tol}});
        alg = cand;
        f = fc;
        fnorm = cnorm;
    }
    if (fnorm <= tol) return alg;
    throw Error("algebraic_nonconvergence",
                "Newton did not converge within the iteration cap",
                {{"residual_norm", fnorm}, {"tol", tol},
                 {"iterations", opts.max_iterations}});
}

DaeModelBuilder::DaeModelBuilder(VariableSpace space, std::vector<std::string> input_names) {
    space.validate();
    model_.reset(new DaeModel());
    model_->space_ = std::move(space);
    model_->input_names_ = std::move(input_names);
    const Index nd = model_->space_.diff_count();
    const Index na = model_->space_.alg_count();
    model_->incidence_ = Incidence(nd, na);
    model_->deriv_rows_.resize(static_cast<size_t>(nd));
    model_->resid_rows_.resize(static_cast<size_t>(na));
    deriv_set_.assign(static_cast<size_t>(nd), false);
    resid_set_.assign(static_cast<size_t>(na), false);
    explicit_set_.assign(static_cast<size_t>(na), false);
}

DaeModelBuilder& DaeModelBuilder::deriv(Index row, DerivRow fn, IndexList alg_reads,
                                        IndexList diff_reads) {
    model_->deriv_rows_.at(static_cast<size_t>(row)) = std::move(fn);
    deriv_set_.at(static_cast<size_t>(row)) = true;
    for (Index a : alg_reads) model_->incidence_.deriv_reads_alg(row, a);
    for (Index d : diff_reads) model_->incidence_.deriv_reads_diff(row, d);
    return *this;
}

DaeModelBuilder& DaeModelBuilder::resid(Index row, ResidRow fn, IndexList diff_reads,
                                        IndexList alg_reads) {
    model_->resid_rows_.at(static_cast<size_t>(row)) = std::move(fn);
    resid_set_.at(static_cast<size_t>(row)) = true;
    for (Index d : diff_reads) model_->incidence_.resid_reads_diff(row, d);
    for (Index a : alg_reads) model_->incidence_.resid_reads_alg(row, a);
    return *this;
}

DaeModelBuilder& DaeModelBuilder::explicit_alg(Index row, ExplicitRow fn) {
    if (model_->explicit_rows_.empty())
        model_->explicit_rows_.resize(static_cast<size_t>(model_->space_.alg_count()));
    model_->explicit_rows_.at(static_cast<size_t>(row)) = std::move(fn);
    explicit_set_.at(static_cast<size_t>(row)) = true;
    return *this;
}

DaeModelBuilder& DaeModelBuilder::mixed(Index resid_row, Index alg, Index diff) {
    model_->incidence_.add_mixed(resid_row, alg, diff);
    return *this;
}

DaeModelPtr DaeModelBuilder::build() {
    if (!model_) throw Error("builder_reused", "build() may only be called once");
    for (size_t i = 0; i < deriv_set_.size(); ++i)
        if (!deriv_set_[i])
            throw validation_error("missing derivative row", {{"row", i}});
    for (size_t k = 0; k < resid_set_.size(); ++k)
        if (!resid_set_[k])
            throw validation_error("missing residual row", {{"row", k}});
    if (!model_->explicit_rows_.empty())
        for (size_t k = 0; k < explicit_set_.size(); ++k)
            if (!explicit_set_[k])
                throw validation_error("explicit rows must cover all algebraic variables",
                                       {{"row", k}});
    model_->incidence_.validate();
    return DaeModelPtr(model_.release());
}

} // namespace rbg
