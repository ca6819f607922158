#include <doctest.h>

#include "rbg/classify.hpp"
#include "rbg/error.hpp"
#include "rbg/restricted_model.hpp"
#include "rbg/thermal/illustrative.hpp"

#include "test_helpers.hpp"

#include <cmath>
#include <random>

using namespace rbg;
using thermal::IllustrativeParams;
using thermal::build_illustrative_cabin;
using thermal::illustrative_schedule;

namespace {

Vector inputs_at(const DaeModel& model, const InputSchedule& s, double t = 0.0) {
    return s.values_for(model.input_names(), t);
}

} // namespace

TEST_SUITE("dae_core") {

TEST_CASE("derivatives vanish at equilibrium") {
    auto model = build_illustrative_cabin();
    InputSchedule sched = illustrative_schedule();
    sched.set("T_cab", -18.0);  // setpoint equal to the uniform state
    Vector theta = Vector::Constant(7, -18.0);
    Vector mu = inputs_at(*model, sched);
    Vector gamma = model->solve_algebraic(theta, mu, Vector::Zero(10), 1e-12);
    Vector d = model->derivatives(theta, gamma, mu, 0.0);
    CHECK(d.lpNorm<Eigen::Infinity>() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("air-zone lag derivative from a cold start") {
    auto model = build_illustrative_cabin();
    Vector theta = Vector::Constant(7, -18.0);
    Vector mu = inputs_at(*model, illustrative_schedule());
    Vector gamma = model->solve_algebraic(theta, mu, Vector::Zero(10), 1e-12);
    Vector d = model->derivatives(theta, gamma, mu, 0.0);
    CHECK(d[6] == doctest::Approx(38.0 / 60.0).epsilon(1e-12));
}

TEST_CASE("windshield inner node balance with prescribed fluxes") {
    auto model = build_illustrative_cabin();
    Vector theta = Vector::Constant(7, -18.0);
    Vector gamma = Vector::Zero(10);
    gamma[0] = 100.0;
    gamma[1] = 40.0;
    Vector mu = inputs_at(*model, illustrative_schedule());
    Vector d = model->derivatives(theta, gamma, mu, 0.0);
    CHECK(d[0] == doctest::Approx(60.0 / (14.8525 * 829.0)).epsilon(1e-12));
}

TEST_CASE("derivative evaluation rejects wrong lengths") {
    auto model = build_illustrative_cabin();
    Vector mu = inputs_at(*model, illustrative_schedule());
    CHECK_THROWS_WITH_AS(model->derivatives(Vector::Zero(6), Vector::Zero(10), mu, 0.0),
                         doctest::Contains("diff"), Error);
    CHECK_THROWS_WITH_AS(model->derivatives(Vector::Zero(7), Vector::Zero(9), mu, 0.0),
                         doctest::Contains("alg"), Error);
}

TEST_CASE("algebraic solve reproduces the internal convection flux") {
    auto model = build_illustrative_cabin();
    Vector theta = Vector::Zero(7);
    theta[0] = 10.0;  // windshield inner face
    theta[6] = 20.0;  // air zone
    Vector mu = inputs_at(*model, illustrative_schedule());
    Vector gamma = model->solve_algebraic(theta, mu, Vector::Zero(10), 1e-12);
    CHECK(gamma[0] == doctest::Approx(260.0).epsilon(1e-12));
}

TEST_CASE("uniform temperatures give zero fluxes") {
    auto model = build_illustrative_cabin();
    Vector theta = Vector::Constant(7, -18.0);
    Vector mu = inputs_at(*model, illustrative_schedule());
    Vector gamma = model->solve_algebraic(theta, mu, Vector::Zero(10), 1e-12);
    CHECK(gamma.lpNorm<Eigen::Infinity>() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("explicit rows and Newton agree") {
    auto model = build_illustrative_cabin();
    std::mt19937_64 rng(3);
    auto u = [&] { return -20.0 + 50.0 * (double(rng() >> 11) * 0x1.0p-53); };
    Vector mu = inputs_at(*model, illustrative_schedule());
    for (int trial = 0; trial < 5; ++trial) {
        Vector theta(7);
        for (Index i = 0; i < 7; ++i) theta[i] = u();
        Vector expl = model->evaluate_explicit(theta, mu);
        // force the Newton path by solving the residual rows directly
        VariableSpace space = model->space();
        DaeModelBuilder b(space, model->input_names());
        for (Index i = 0; i < 7; ++i) b.deriv(i, model->deriv_rows()[size_t(i)], {}, {});
        for (Index r = 0; r < 10; ++r) b.resid(r, model->resid_rows()[size_t(r)], {}, {});
        auto implicit_model = b.build();
        Vector newt = implicit_model->solve_algebraic(theta, mu, Vector::Zero(10), 1e-12);
        CHECK((expl - newt).lpNorm<Eigen::Infinity>() < 1e-10);
        CHECK(model->residuals(theta, expl, mu).lpNorm<Eigen::Infinity>() < 1e-10);
    }
}

TEST_CASE("Newton reports non-convergence with the residual norm") {
    // residual with no root: q^2 + 1 = 0
    VariableSpace space = VariableSpace::make({"s"}, {"q"}, Vector::Zero(1));
    DaeModelBuilder b(std::move(space), {});
    b.deriv(0, [](const Vector&, const Vector&, const Vector&, double) { return 0.0; }, {});
    b.resid(0, [](const Vector&, const Vector& q, const Vector&) { return q[0] * q[0] + 1.0; },
            {});
    auto model = b.build();
    try {
        model->solve_algebraic(Vector::Zero(1), Vector(0), Vector::Zero(1), 1e-10);
        FAIL("expected non-convergence");
    } catch (const Error& e) {
        CHECK(e.code() == "algebraic_nonconvergence");
        CHECK(e.details().contains("residual_norm"));
    }
}

TEST_CASE("structural soundness: finite-difference probes respect incidence") {
    auto model = build_illustrative_cabin();
    const Incidence& inc = model->incidence();
    Vector mu = inputs_at(*model, illustrative_schedule());
    std::mt19937_64 rng(11);
    auto u = [&] { return -10.0 + 40.0 * (double(rng() >> 11) * 0x1.0p-53); };

    for (int probe = 0; probe < 100; ++probe) {
        Vector theta(7), gamma(10);
        for (Index i = 0; i < 7; ++i) theta[i] = u();
        for (Index i = 0; i < 10; ++i) gamma[i] = u();
        Vector d0 = model->derivatives(theta, gamma, mu, 0.0);
        Vector r0 = model->residuals(theta, gamma, mu);

        const Index id = static_cast<Index>(rng() % 7);
        Vector tp = theta;
        tp[id] += 1e-3;
        Vector d1 = model->derivatives(tp, gamma, mu, 0.0);
        Vector r1 = model->residuals(tp, gamma, mu);
        for (Index j = 0; j < 7; ++j)
            if (std::abs(d1[j] - d0[j]) > 1e-12) CHECK(inc.diff_in_deriv(j, id));
        for (Index j = 0; j < 10; ++j)
            if (std::abs(r1[j] - r0[j]) > 1e-12) CHECK(inc.diff_in_resid(j, id));

        const Index ia = static_cast<Index>(rng() % 10);
        Vector gp = gamma;
        gp[ia] += 1e-3;
        d1 = model->derivatives(theta, gp, mu, 0.0);
        r1 = model->residuals(theta, gp, mu);
        for (Index j = 0; j < 7; ++j)
            if (std::abs(d1[j] - d0[j]) > 1e-12) CHECK(inc.alg_in_deriv(j, ia));
        for (Index j = 0; j < 10; ++j)
            if (std::abs(r1[j] - r0[j]) > 1e-12) CHECK(inc.alg_in_resid(j, ia));
    }
}

TEST_CASE("identity restriction agrees with the full evaluators") {
    auto model = build_illustrative_cabin();
    Partition all = classify_variables(*model, {0, 1, 2, 3, 4, 5, 6});
    CHECK(all.secondary_diff.empty());
    CHECK(all.tertiary_diff.empty());
    RestrictedModel restricted = restrict_model(model, all);

    Vector mu = inputs_at(*model, illustrative_schedule());
    std::mt19937_64 rng(5);
    auto u = [&] { return -15.0 + 40.0 * (double(rng() >> 11) * 0x1.0p-53); };
    for (int trial = 0; trial < 10; ++trial) {
        Vector theta(7);
        for (Index i = 0; i < 7; ++i) theta[i] = u();
        Vector gamma = model->evaluate_explicit(theta, mu);
        Vector gp(all.primary_alg.size());
        for (size_t i = 0; i < all.primary_alg.size(); ++i) gp[Index(i)] = gamma[all.primary_alg[i]];

        Vector full_d = model->derivatives(theta, gamma, mu, 0.0);
        Vector red_d = restricted.deriv(theta, gp, Vector(0), mu, 0.0);
        for (size_t i = 0; i < all.primary_diff.size(); ++i)
            CHECK(std::abs(red_d[Index(i)] - full_d[all.primary_diff[i]]) < 1e-12);

        Vector full_r = model->residuals(theta, gamma, mu);
        Vector red_r = restricted.resid(theta, gp, Vector(0), mu);
        for (size_t i = 0; i < all.primary_alg.size(); ++i)
            CHECK(std::abs(red_r[Index(i)] - full_r[all.primary_alg[i]]) < 1e-12);
    }
}

TEST_CASE("published partition: restricted rows match and never touch tertiary values") {
    auto model = build_illustrative_cabin();
    Partition part = classify_variables(*model, {2, 3, 4, 6});
    RestrictedModel restricted = restrict_model(model, part);
    CHECK(restricted.primary_diff_count() == 4);
    CHECK(restricted.primary_alg_count() == 5);

    Vector mu = inputs_at(*model, illustrative_schedule());
    Vector theta(7);
    theta << 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0;
    Vector gamma = model->evaluate_explicit(theta, mu);

    Vector theta_p(4), theta_s(2), gamma_p(5);
    for (size_t i = 0; i < 4; ++i) theta_p[Index(i)] = theta[part.primary_diff[i]];
    for (size_t i = 0; i < 2; ++i) theta_s[Index(i)] = theta[part.secondary_diff[i]];
    for (size_t i = 0; i < 5; ++i) gamma_p[Index(i)] = gamma[part.primary_alg[i]];

    // tertiary slots stay NaN inside the evaluator; finite results prove the
    // retained rows never read T_1 or the tertiary fluxes
    Vector d = restricted.deriv(theta_p, gamma_p, theta_s, mu, 0.0);
    CHECK(d.allFinite());
    for (size_t i = 0; i < 4; ++i)
        CHECK(d[Index(i)] ==
              doctest::Approx(model->derivatives(theta, gamma, mu, 0.0)[part.primary_diff[i]])
                  .epsilon(1e-14));

    Vector solved = restricted.solve_alg(theta_p, theta_s, mu, Vector::Zero(5), 1e-12);
    CHECK(solved.allFinite());
    for (size_t i = 0; i < 5; ++i)
        CHECK(solved[Index(i)] == doctest::Approx(gamma[part.primary_alg[i]]).epsilon(1e-14));
}

TEST_CASE("restriction rejects out-of-range partitions") {
    auto model = build_illustrative_cabin();
    Partition bad;
    bad.primary_diff = {0, 1, 2, 3, 4, 5, 7};  // 7 is out of range
    bad.primary_alg = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK_THROWS_AS(restrict_model(model, bad), Error);
}

} // TEST_SUITE
