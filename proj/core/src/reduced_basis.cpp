#include "rbg/reduced_basis.hpp"

#include "rbg/error.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace rbg {

Matrix ReducedBasis::submatrix(const IndexList& rows, Index n_modes) const {
    Matrix out(static_cast<Index>(rows.size()), n_modes);
    for (size_t r = 0; r < rows.size(); ++r)
        out.row(static_cast<Index>(r)) = modes.row(rows[r]).head(n_modes);
    return out;
}

ReducedBasis truncated_svd(const SnapshotMatrix& snapshots, const TruncationRule& rule) {
    const Matrix& a = snapshots.data;
    if (a.size() == 0 || a.norm() == 0.0)
        throw validation_error("snapshot matrix is empty or identically zero");

    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU);
    const Vector& sv = svd.singularValues();

    Index n = 0;
    switch (rule.kind) {
    case TruncationRule::Kind::FixedCount:
        if (rule.mode_count < 1 || rule.mode_count > sv.size())
            throw validation_error("mode count out of range",
                                   {{"requested", rule.mode_count}, {"available", sv.size()}});
        n = rule.mode_count;
        break;
    case TruncationRule::Kind::ResidualTol: {
        if (!(rule.residual_tol > 0.0))
            throw validation_error("residual tolerance must be positive; give either a "
                                   "positive tolerance or a fixed mode count",
                                   {{"residual_tol", rule.residual_tol}});
        // smallest n with sqrt(sum_{i>n} s_i^2) <= tol
        double tail = 0.0;
        Index cut = sv.size();
        for (Index i = sv.size() - 1; i >= 0; --i) {
            tail += sv[i] * sv[i];
            if (std::sqrt(tail) > rule.residual_tol) { cut = i + 1; break; }
            cut = i;
        }
        n = std::max<Index>(cut, 1);
        break;
    }
    }
    // never keep numerically zero modes
    while (n > 1 && !(sv[n - 1] > 0.0)) --n;

    ReducedBasis basis;
    basis.modes = svd.matrixU().leftCols(n);
    basis.singular_values = sv.head(n);
    basis.spectrum = sv;
    basis.rule = rule;
    basis.scale = snapshots.scale;
    basis.initial = snapshots.initial;

    // sign canonicalization: largest-|entry| of each column positive
    for (Index j = 0; j < n; ++j) {
        Index at = 0;
        basis.modes.col(j).cwiseAbs().maxCoeff(&at);
        if (basis.modes(at, j) < 0.0) basis.modes.col(j) = -basis.modes.col(j);
    }
    return basis;
}

} // namespace rbg
