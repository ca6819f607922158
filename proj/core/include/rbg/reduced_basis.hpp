#pragma once

#include "rbg/snapshots.hpp"

namespace rbg {

/// Truncation rule for the snapshot SVD: keep a fixed number of modes, or
/// the smallest count whose Frobenius residual stays below a tolerance.
struct TruncationRule {
    enum class Kind { FixedCount, ResidualTol };
    Kind kind = Kind::FixedCount;
    Index mode_count = 0;
    double residual_tol = 0.0;

    static TruncationRule fixed(Index n) { return {Kind::FixedCount, n, 0.0}; }
    static TruncationRule residual(double eps) { return {Kind::ResidualTol, 0, eps}; }
};

/// Orthonormal reduced basis of the scaled offset snapshots, with the full
/// singular spectrum kept for diagnostics and the projection-residual
/// identity. Columns are sign-canonicalized: the largest-magnitude entry of
/// each mode is positive, so rebuilt artifacts are reproducible (all
/// downstream quantities are invariant under column sign flips anyway).
struct ReducedBasis {
    Matrix modes;            // diff_count x mode_count, orthonormal columns
    Vector singular_values;  // first mode_count values, non-increasing
    Vector spectrum;         // all singular values of the snapshot matrix
    TruncationRule rule;
    Vector scale;
    Vector initial;

    Index mode_count() const { return modes.cols(); }

    /// Rows of the mode matrix selected by `rows`, first `n_modes` columns.
    Matrix submatrix(const IndexList& rows, Index n_modes) const;
};

/// Thin SVD of the snapshot matrix truncated per `rule`. The Frobenius norm
/// of the discarded part equals sqrt(sum of squared dropped singular values).
ReducedBasis truncated_svd(const SnapshotMatrix& snapshots, const TruncationRule& rule);

} // namespace rbg
