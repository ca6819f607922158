#pragma once

#include "rbg/dae_model.hpp"
#include "rbg/reduced_basis.hpp"

#include <atomic>
#include <memory>

namespace rbg::testing {

/// 7x4 reduced-basis fixture of the two-wall cabin, stored verbatim at the
/// four-decimal precision it was published with. Tests against it stay
/// decoupled from integrator accuracy.
inline Matrix cabin_basis_fixture() {
    Matrix v(7, 4);
    v << -0.3290, -0.3630, -0.1841, -0.0527,
         -0.3044, -0.4360, -0.1997, -0.0472,
         -0.2807, -0.4974, -0.2457, -0.0080,
         -0.5314,  0.1738,  0.4238, -0.6702,
         -0.2525, -0.1760,  0.7418,  0.5334,
         -0.0492, -0.1852,  0.0350,  0.3274,
         -0.6097,  0.5790, -0.3672,  0.3925;
    return v;
}

/// Coupling weights the fixture must reproduce (secondary rows {2, 6},
/// four-decimal print precision).
inline Matrix cabin_coupling_fixture() {
    Matrix w(2, 4);
    w << 0.9176, 0.0699, 0.0022, 0.0150,
         0.2480, -0.2331, 0.2875, 0.0506;
    return w;
}

/// Reconstruction weights for the tertiary row {1}.
inline Matrix cabin_reconstruction_fixture() {
    Matrix w(1, 4);
    w << 0.8385, 0.1051, 0.0002, 0.0619;
    return w;
}

/// Wraps `basis_like` rows/columns into a ReducedBasis with unit scaling and
/// zero initial values (fixture use only).
inline ReducedBasis basis_from_matrix(const Matrix& modes) {
    ReducedBasis b;
    b.modes = modes;
    b.singular_values = Vector::Ones(modes.cols());
    b.spectrum = Vector::Ones(modes.cols());
    b.rule = TruncationRule::fixed(modes.cols());
    b.scale = Vector::Ones(modes.rows());
    b.initial = Vector::Zero(modes.rows());
    return b;
}

/// Two identical three-node conduction chains driven by one input, tied by a
/// symmetric exchange between their first nodes. Trajectories of the twin
/// chains coincide, so snapshot data has exact rank 3: the truncated basis
/// at three modes is exact and the reduced model must replay training data
/// to machine precision.
///
/// States: A1 A2 A3 B1 B2 B3 (all starting at 0). Algebraic: the six chain
/// fluxes plus the tie flux. Input: T_drive.
inline DaeModelPtr build_twin_chain_model(double conductance = 5.0, double capacity = 100.0,
                                          double tie_conductance = 2.0) {
    const double k = conductance, cap = capacity, kt = tie_conductance;
    VariableSpace space = VariableSpace::make(
        {"A_1", "A_2", "A_3", "B_1", "B_2", "B_3"},
        {"q_a_in", "q_a_12", "q_a_23", "q_b_in", "q_b_12", "q_b_23", "q_tie"},
        Vector::Zero(6));
    DaeModelBuilder b(std::move(space), {"T_drive"});

    b.deriv(0, [cap](const Vector&, const Vector& q, const Vector&, double) {
        return (q[0] - q[1] - q[6]) / cap;
    }, {0, 1, 6});
    b.deriv(1, [cap](const Vector&, const Vector& q, const Vector&, double) {
        return (q[1] - q[2]) / cap;
    }, {1, 2});
    b.deriv(2, [cap](const Vector&, const Vector& q, const Vector&, double) {
        return q[2] / cap;
    }, {2});
    b.deriv(3, [cap](const Vector&, const Vector& q, const Vector&, double) {
        return (q[3] - q[4] + q[6]) / cap;
    }, {3, 4, 6});
    b.deriv(4, [cap](const Vector&, const Vector& q, const Vector&, double) {
        return (q[4] - q[5]) / cap;
    }, {4, 5});
    b.deriv(5, [cap](const Vector&, const Vector& q, const Vector&, double) {
        return q[5] / cap;
    }, {5});

    auto add = [&](Index row, ExplicitRow fn, IndexList diff_reads) {
        b.explicit_alg(row, fn);
        b.resid(row,
                [fn, row](const Vector& th, const Vector& q, const Vector& mu) {
                    return fn(th, q, mu) - q[row];
                },
                std::move(diff_reads));
    };
    add(0, [k](const Vector& th, const Vector&, const Vector& mu) { return k * (mu[0] - th[0]); },
        {0});
    add(1, [k](const Vector& th, const Vector&, const Vector&) { return k * (th[0] - th[1]); },
        {0, 1});
    add(2, [k](const Vector& th, const Vector&, const Vector&) { return k * (th[1] - th[2]); },
        {1, 2});
    add(3, [k](const Vector& th, const Vector&, const Vector& mu) { return k * (mu[0] - th[3]); },
        {3});
    add(4, [k](const Vector& th, const Vector&, const Vector&) { return k * (th[3] - th[4]); },
        {3, 4});
    add(5, [k](const Vector& th, const Vector&, const Vector&) { return k * (th[4] - th[5]); },
        {4, 5});
    add(6, [kt](const Vector& th, const Vector&, const Vector&) { return kt * (th[0] - th[3]); },
        {0, 3});
    return b.build();
}

/// Per-row evaluation counters for a model, used to prove that reduced
/// stepping never touches tertiary equations.
struct CountingModel {
    DaeModelPtr model;
    std::shared_ptr<std::vector<std::atomic<long>>> deriv_calls;
    std::shared_ptr<std::vector<std::atomic<long>>> alg_calls;  // resid or explicit
};

/// Rebuilds `source` with every row wrapped in a counting closure. Incidence
/// and explicit rows are preserved.
inline CountingModel wrap_with_counters(const DaeModel& source) {
    const Index nd = source.diff_count();
    const Index na = source.alg_count();
    auto deriv_calls = std::make_shared<std::vector<std::atomic<long>>>(static_cast<size_t>(nd));
    auto alg_calls = std::make_shared<std::vector<std::atomic<long>>>(static_cast<size_t>(na));

    DaeModelBuilder b(source.space(), source.input_names());
    const Incidence& inc = source.incidence();
    for (Index i = 0; i < nd; ++i) {
        IndexList alg_reads, diff_reads;
        for (Index a = 0; a < na; ++a)
            if (inc.alg_in_deriv(i, a)) alg_reads.push_back(a);
        for (Index d = 0; d < nd; ++d)
            if (inc.diff_in_deriv(i, d)) diff_reads.push_back(d);
        DerivRow fn = source.deriv_rows()[static_cast<size_t>(i)];
        b.deriv(i,
                [fn, deriv_calls, i](const Vector& th, const Vector& g, const Vector& mu,
                                     double t) {
                    (*deriv_calls)[static_cast<size_t>(i)]++;
                    return fn(th, g, mu, t);
                },
                std::move(alg_reads), std::move(diff_reads));
    }
    for (Index r = 0; r < na; ++r) {
        IndexList diff_reads, alg_reads;
        for (Index d = 0; d < nd; ++d)
            if (inc.diff_in_resid(r, d)) diff_reads.push_back(d);
        for (Index a = 0; a < na; ++a)
            if (a != r && inc.alg_in_resid(r, a)) alg_reads.push_back(a);
        ResidRow fn = source.resid_rows()[static_cast<size_t>(r)];
        b.resid(r,
                [fn, alg_calls, r](const Vector& th, const Vector& g, const Vector& mu) {
                    (*alg_calls)[static_cast<size_t>(r)]++;
                    return fn(th, g, mu);
                },
                std::move(diff_reads), std::move(alg_reads));
        if (source.has_explicit()) {
            ExplicitRow ex = source.explicit_rows()[static_cast<size_t>(r)];
            b.explicit_alg(r, [ex, alg_calls, r](const Vector& th, const Vector& g,
                                                 const Vector& mu) {
                (*alg_calls)[static_cast<size_t>(r)]++;
                return ex(th, g, mu);
            });
        }
    }
    for (const MixedPair& m : inc.mixed_pairs()) b.mixed(m.resid_row, m.alg, m.diff);
    return CountingModel{b.build(), deriv_calls, alg_calls};
}

} // namespace rbg::testing
