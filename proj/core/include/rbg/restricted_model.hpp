#pragma once

#include "rbg/dae_model.hpp"
#include "rbg/partition.hpp"

namespace rbg {

/// Evaluators over (primary diff, primary alg, secondary diff, inputs) equal
/// to the retained rows of the full model. Tertiary variables are neither
/// read nor written: tertiary slots of the scratch vectors hold NaN, so any
/// structural leak through a retained row surfaces as a non-finite result.
class RestrictedModel {
public:
    RestrictedModel(DaeModelPtr model, Partition partition);

    const DaeModel& model() const { return *model_; }
    const Partition& partition() const { return partition_; }

    Index primary_diff_count() const { return static_cast<Index>(partition_.primary_diff.size()); }
    Index secondary_diff_count() const { return static_cast<Index>(partition_.secondary_diff.size()); }
    Index primary_alg_count() const { return static_cast<Index>(partition_.primary_alg.size()); }

    /// Reusable full-size work vectors, NaN outside the retained slots.
    struct Scratch {
        Vector diff;
        Vector alg;
    };
    Scratch make_scratch() const;

    /// Retained derivative rows. `out` must have primary_diff_count() entries.
    void deriv_into(const Vector& primary_diff, const Vector& primary_alg,
                    const Vector& secondary_diff, const Vector& inputs, double t,
                    Scratch& scratch, Vector& out) const;

    /// Retained residual rows. `out` must have primary_alg_count() entries.
    void resid_into(const Vector& primary_diff, const Vector& primary_alg,
                    const Vector& secondary_diff, const Vector& inputs,
                    Scratch& scratch, Vector& out) const;

    /// Consistent retained algebraic state: explicit rows in causal order when
    /// the model has them, damped Newton over the retained rows otherwise.
    void solve_alg_into(const Vector& primary_diff, const Vector& secondary_diff,
                        const Vector& inputs, const Vector& guess, double tol,
                        Scratch& scratch, Vector& out,
                        const NewtonOptions& opts = {}) const;

    // allocating conveniences
    Vector deriv(const Vector& primary_diff, const Vector& primary_alg,
                 const Vector& secondary_diff, const Vector& inputs, double t) const;
    Vector resid(const Vector& primary_diff, const Vector& primary_alg,
                 const Vector& secondary_diff, const Vector& inputs) const;
    Vector solve_alg(const Vector& primary_diff, const Vector& secondary_diff,
                     const Vector& inputs, const Vector& guess, double tol) const;

private:
    void scatter(const Vector& primary_diff, const Vector& secondary_diff,
                 Scratch& scratch) const;

    DaeModelPtr model_;
    Partition partition_;
};

/// Retained-row evaluators for a partition of this model (row selection of
/// the full operators). Throws if the partition does not fit the model.
RestrictedModel restrict_model(DaeModelPtr model, Partition partition);

} // namespace rbg
