#include "rbg/linear_layer.hpp"

#include "rbg/error.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace rbg {

Vector LinearLayer::forward(const Vector& primary_offsets, const Vector& output_initial) const {
    if (primary_offsets.size() != input_count())
        throw dimension_error("primary_offsets", input_count(), primary_offsets.size());
    Vector out = weights * primary_offsets + bias;
    if (activation == Activation::Relu) {
        if (output_initial.size() != output_count())
            throw dimension_error("output_initial", output_count(), output_initial.size());
        out = (output_initial + out).cwiseMax(0.0) - output_initial;
    }
    return out;
}

LinearLayer calibrate_layer(const ReducedBasis& basis, const IndexList& primary,
                            const IndexList& targets, Index modes_used,
                            Activation activation) {
    const Index n = basis.mode_count();
    if (modes_used < 1 || modes_used > n)
        throw validation_error("modes_used must lie in [1, mode_count]",
                               {{"modes_used", modes_used}, {"mode_count", n}});
    for (Index t : targets)
        if (std::find(primary.begin(), primary.end(), t) != primary.end())
            throw validation_error("layer targets must be disjoint from the primary set",
                                   {{"index", t}});

    LinearLayer layer;
    layer.activation = activation;
    layer.outputs = targets;
    layer.modes_used = modes_used;
    layer.bias = Vector::Zero(static_cast<Index>(targets.size()));

    if (targets.empty()) {
        layer.weights.resize(0, static_cast<Index>(primary.size()));
        return layer;
    }

    const Matrix vp = basis.submatrix(primary, modes_used);
    const Matrix vt = basis.submatrix(targets, modes_used);
    const Matrix gram = vp.transpose() * vp;

    Eigen::JacobiSVD<Matrix> cond(gram);
    const Vector& sv = cond.singularValues();
    if (sv.size() == 0 || !(sv[sv.size() - 1] > 1e-12 * sv[0]))
        throw Error("singular_calibration",
                    "normal-equations matrix is numerically singular; calibrate with fewer "
                    "modes",
                    {{"modes_used", modes_used}});

    // W = Vt (Vp^T Vp)^-1 Vp^T, written as solve(gram, Vp^T) to keep the
    // normal-equations form
    layer.weights = vt * gram.ldlt().solve(vp.transpose());
    return layer;
}

Index select_mode_count(const ReducedBasis& basis, const IndexList& primary,
                        const IndexList& secondary, const IndexList& tertiary,
                        const SnapshotMatrix& validation) {
    const Index n = basis.mode_count();
    double best = std::numeric_limits<double>::infinity();
    Index best_n = n;

    Matrix prim(static_cast<Index>(primary.size()), validation.column_count());
    for (size_t r = 0; r < primary.size(); ++r)
        prim.row(static_cast<Index>(r)) = validation.data.row(primary[r]);

    auto max_err = [&](const LinearLayer& layer) {
        if (layer.output_count() == 0) return 0.0;
        Matrix truth(layer.output_count(), validation.column_count());
        for (Index r = 0; r < layer.output_count(); ++r)
            truth.row(r) = validation.data.row(layer.outputs[static_cast<size_t>(r)]);
        Matrix pred = layer.weights * prim;
        return (pred - truth).cwiseAbs().maxCoeff();
    };

    for (Index cand = 1; cand <= n; ++cand) {
        double err = 0.0;
        try {
            err = std::max(max_err(calibrate_layer(basis, primary, secondary, cand)),
                           max_err(calibrate_layer(basis, primary, tertiary, cand)));
        } catch (const Error&) {
            continue;  // singular at this count, skip
        }
        if (err < best) {
            best = err;
            best_n = cand;
        }
    }
    return best_n;
}

} // namespace rbg
