#pragma once

#include "rbg/incidence.hpp"
#include "rbg/types.hpp"
#include "rbg/variable_space.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rbg {

/// One derivative equation: d(diff[row])/dt = f(diff, alg, inputs, t).
using DerivRow = std::function<double(const Vector& diff, const Vector& alg,
                                      const Vector& inputs, double t)>;

/// One algebraic residual; row k causally defines alg[k], so the residual is
/// zero exactly when alg[k] takes its consistent value.
using ResidRow = std::function<double(const Vector& diff, const Vector& alg,
                                      const Vector& inputs)>;

/// Explicit form of residual row k: returns the consistent alg[k] directly.
/// Rows are evaluated in ascending index order and may read lower-indexed
/// algebraic entries already filled in.
using ExplicitRow = std::function<double(const Vector& diff, const Vector& alg,
                                         const Vector& inputs)>;

struct NewtonOptions {
    int max_iterations = 50;
    int max_halvings = 30;
};

/// Immutable semi-explicit DAE with named variables and declared structural
/// incidence. All evaluators are pure; instances are safe to share across
/// threads via shared_ptr<const DaeModel>.
class DaeModel {
public:
    const VariableSpace& space() const { return space_; }
    const std::vector<std::string>& input_names() const { return input_names_; }
    const Incidence& incidence() const { return incidence_; }

    Index diff_count() const { return space_.diff_count(); }
    Index alg_count() const { return space_.alg_count(); }
    bool has_explicit() const { return !explicit_rows_.empty(); }

    /// Full derivative vector. Throws on dimension mismatch, naming the
    /// offending vector.
    Vector derivatives(const Vector& diff, const Vector& alg, const Vector& inputs,
                       double t) const;

    /// Full residual vector (zero at a consistent algebraic state).
    Vector residuals(const Vector& diff, const Vector& alg, const Vector& inputs) const;

    /// Consistent algebraic state with max-norm residual <= tol. Uses the
    /// explicit rows when present, otherwise a damped Newton iteration seeded
    /// at `guess`. Non-convergence raises an error carrying the residual norm
    /// (usually a causality or modeling defect).
    Vector solve_algebraic(const Vector& diff, const Vector& inputs, const Vector& guess,
                           double tol, const NewtonOptions& opts = {}) const;

    /// Explicit evaluation of all algebraic rows in causal order.
    Vector evaluate_explicit(const Vector& diff, const Vector& inputs) const;

    // row access for restriction and instrumentation
    const std::vector<DerivRow>& deriv_rows() const { return deriv_rows_; }
    const std::vector<ResidRow>& resid_rows() const { return resid_rows_; }
    const std::vector<ExplicitRow>& explicit_rows() const { return explicit_rows_; }

private:
    friend class DaeModelBuilder;
    DaeModel() = default;

    VariableSpace space_;
    std::vector<std::string> input_names_;
    Incidence incidence_;
    std::vector<DerivRow> deriv_rows_;
    std::vector<ResidRow> resid_rows_;
    std::vector<ExplicitRow> explicit_rows_;  // empty when no explicit form exists
};

using DaeModelPtr = std::shared_ptr<const DaeModel>;

/// Assembles a DaeModel row by row, deriving incidence from the declared
/// reads of each row.
class DaeModelBuilder {
public:
    explicit DaeModelBuilder(VariableSpace space, std::vector<std::string> input_names);

    /// Derivative equation for diff[row]; `alg_reads`/`diff_reads` declare the
    /// structurally coupled variables.
    DaeModelBuilder& deriv(Index row, DerivRow fn, IndexList alg_reads,
                           IndexList diff_reads = {});

    /// Residual for alg[row]; the diagonal read is implicit. `alg_reads` lists
    /// additional algebraic variables the row involves.
    DaeModelBuilder& resid(Index row, ResidRow fn, IndexList diff_reads,
                           IndexList alg_reads = {});

    /// Explicit form of alg[row]. Either all rows or none get one.
    DaeModelBuilder& explicit_alg(Index row, ExplicitRow fn);

    DaeModelBuilder& mixed(Index resid_row, Index alg, Index diff);

    /// Validates completeness and incidence, then freezes the model.
    DaeModelPtr build();

private:
    std::unique_ptr<DaeModel> model_;
    std::vector<bool> deriv_set_, resid_set_, explicit_set_;
};

} // namespace rbg
