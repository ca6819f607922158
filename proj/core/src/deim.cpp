#include "rbg/deim.hpp"

#include "rbg/error.hpp"

#include <Eigen/LU>
#include <algorithm>

namespace rbg {

IndexList InterpolationIndices::sorted() const {
    IndexList s = order;
    std::sort(s.begin(), s.end());
    return s;
}

InterpolationIndices select_interpolation_indices(const Matrix& modes) {
    const Index n = modes.cols();
    if (n < 1) throw validation_error("mode matrix must have at least one column");

    InterpolationIndices result;
    Index first = 0;
    modes.col(0).cwiseAbs().maxCoeff(&first);
    result.order.push_back(first);

    for (Index l = 1; l < n; ++l) {
        Matrix sub(l, l);
        Vector rhs(l);
        for (Index r = 0; r < l; ++r) {
            sub.row(r) = modes.row(result.order[static_cast<size_t>(r)]).head(l);
            rhs[r] = modes(result.order[static_cast<size_t>(r)], l);
        }
        Eigen::FullPivLU<Matrix> lu(sub);
        if (!lu.isInvertible())
            throw Error("degenerate_basis",
                        "interpolation system became singular while selecting index " +
                            std::to_string(l + 1),
                        {{"mode", l + 1}});
        Vector coeff = lu.solve(rhs);
        Vector residual = modes.col(l) - modes.leftCols(l) * coeff;
        Index next = 0;
        residual.cwiseAbs().maxCoeff(&next);
        result.order.push_back(next);
    }

    // greedy selection never repeats a row: the residual vanishes on chosen rows
    IndexList check = result.sorted();
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        throw Error("degenerate_basis", "interpolation produced a repeated index");
    return result;
}

InterpolationIndices select_interpolation_indices(const ReducedBasis& basis) {
    return select_interpolation_indices(basis.modes);
}

} // namespace rbg
