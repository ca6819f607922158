#pragma once

#include "rbg/reduced_basis.hpp"

namespace rbg {

/// Greedy interpolation-index selection over the mode matrix: the first
/// index maximizes |mode 1|; each next index maximizes the absolute residual
/// of the next mode after interpolating it on the rows already chosen.
/// `order` records the selection sequence; `sorted()` gives the index set.
struct InterpolationIndices {
    IndexList order;
    IndexList sorted() const;
};

/// Runs the greedy selection on all columns of `basis`. Throws if an
/// intermediate interpolation system is singular (degenerate basis).
InterpolationIndices select_interpolation_indices(const ReducedBasis& basis);

/// Same, on a raw orthonormal mode matrix.
InterpolationIndices select_interpolation_indices(const Matrix& modes);

} // namespace rbg
