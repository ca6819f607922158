#include "rbg/thermal/illustrative.hpp"

#include "rbg/error.hpp"

namespace rbg::thermal {

namespace {
// input channel order
enum MuIdx { kHExt = 0, kHInt, kTau, kTExt, kTCab };
} // namespace

void IllustrativeParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0))
            throw validation_error(std::string("parameter ") + name + " must be positive",
                                   {{"value", v}});
    };
    positive(windshield_mass_kg, "windshield_mass_kg");
    positive(windshield_area_m2, "windshield_area_m2");
    positive(windshield_thickness_m, "windshield_thickness_m");
    positive(windshield_cp_J_per_kgK, "windshield_cp_J_per_kgK");
    positive(windshield_conductivity_W_per_mK, "windshield_conductivity_W_per_mK");
    positive(roof_mass_kg, "roof_mass_kg");
    positive(roof_area_m2, "roof_area_m2");
    positive(roof_thickness_m, "roof_thickness_m");
    positive(roof_cp_J_per_kgK, "roof_cp_J_per_kgK");
    positive(roof_conductivity_W_per_mK, "roof_conductivity_W_per_mK");
    positive(h_int_W_per_m2K, "h_int_W_per_m2K");
    positive(h_ext_W_per_m2K, "h_ext_W_per_m2K");
    positive(lag_time_s, "lag_time_s");
}

DaeModelPtr build_illustrative_cabin(const IllustrativeParams& p) {
    p.validate();

    const double node_fraction = p.mass_split == WallMassSplit::Thirds ? 1.0 / 3.0 : 1.0;
    const double cap_w = node_fraction * p.windshield_mass_kg * p.windshield_cp_J_per_kgK;
    const double cap_r = node_fraction * p.roof_mass_kg * p.roof_cp_J_per_kgK;
    const double k_w =
        2.0 * p.windshield_conductivity_W_per_mK * p.windshield_area_m2 / p.windshield_thickness_m;
    const double k_r = 2.0 * p.roof_conductivity_W_per_mK * p.roof_area_m2 / p.roof_thickness_m;
    const double area_w = p.windshield_area_m2;
    const double area_r = p.roof_area_m2;

    VariableSpace space = VariableSpace::make(
        {"T_1", "T_2", "T_3", "T_4", "T_5", "T_6", "T_7"},
        {"Qdot_1", "Qdot_2", "Qdot_3", "Qdot_4", "Qdot_5", "Qdot_6", "Qdot_7", "Qdot_8",
         "Qdot_9", "Qdot_10"},
        Vector::Constant(7, p.ambient_temp_c));

    DaeModelBuilder b(std::move(space), {"h_ext", "h_int", "tau", "T_ext", "T_cab"});

    // wall temperature nodes: capacitance times dT/dt balances the two
    // adjacent fluxes
    for (Index i = 0; i < 3; ++i)
        b.deriv(i,
                [cap_w, i](const Vector&, const Vector& q, const Vector&, double) {
                    return (q[i] - q[i + 1]) / cap_w;
                },
                {i, i + 1});
    for (Index i = 3; i < 6; ++i)
        b.deriv(i,
                [cap_r, i](const Vector&, const Vector& q, const Vector&, double) {
                    return (q[i + 1] - q[i + 2]) / cap_r;
                },
                {i + 1, i + 2});
    // the air zone is a signal source: first-order lag toward the setpoint,
    // no flux feedback
    b.deriv(6,
            [](const Vector& T, const Vector&, const Vector& mu, double) {
                return (mu[kTCab] - T[6]) / mu[kTau];
            },
            {}, {6});

    struct Flux {
        Index row;
        ExplicitRow expr;
        IndexList diff_reads;
        IndexList alg_reads;
    };
    const std::vector<Flux> fluxes = {
        {0,
         [area_w](const Vector& T, const Vector&, const Vector& mu) {
             return mu[kHInt] * area_w * (T[6] - T[0]);
         },
         {0, 6}, {}},
        {1, [k_w](const Vector& T, const Vector&, const Vector&) { return k_w * (T[0] - T[1]); },
         {0, 1}, {}},
        {2, [k_w](const Vector& T, const Vector&, const Vector&) { return k_w * (T[1] - T[2]); },
         {1, 2}, {}},
        {3,
         [area_w](const Vector& T, const Vector&, const Vector& mu) {
             return mu[kHExt] * area_w * (T[2] - mu[kTExt]);
         },
         {2}, {}},
        {4,
         [area_r](const Vector& T, const Vector&, const Vector& mu) {
             return mu[kHInt] * area_r * (T[6] - T[3]);
         },
         {3, 6}, {}},
        {5, [k_r](const Vector& T, const Vector&, const Vector&) { return k_r * (T[3] - T[4]); },
         {3, 4}, {}},
        {6, [k_r](const Vector& T, const Vector&, const Vector&) { return k_r * (T[4] - T[5]); },
         {4, 5}, {}},
        {7,
         [area_r](const Vector& T, const Vector&, const Vector& mu) {
             return mu[kHExt] * area_r * (T[5] - mu[kTExt]);
         },
         {5}, {}},
        // junction sums: total internal and external convective fluxes
        {8, [](const Vector&, const Vector& q, const Vector&) { return q[0] + q[4]; },
         {}, {0, 4}},
        {9, [](const Vector&, const Vector& q, const Vector&) { return q[3] + q[7]; },
         {}, {3, 7}},
    };

    for (const Flux& f : fluxes) {
        b.explicit_alg(f.row, f.expr);
        ExplicitRow expr = f.expr;
        Index row = f.row;
        b.resid(row,
                [expr, row](const Vector& T, const Vector& q, const Vector& mu) {
                    return expr(T, q, mu) - q[row];
                },
                f.diff_reads, f.alg_reads);
    }

    return b.build();
}

InputSchedule illustrative_schedule(const IllustrativeParams& p) {
    InputSchedule s;
    s.set("h_ext", p.h_ext_W_per_m2K);
    s.set("h_int", p.h_int_W_per_m2K);
    s.set("tau", p.lag_time_s);
    s.set("T_ext", p.ambient_temp_c);
    s.set("T_cab", p.cabin_setpoint_c);
    return s;
}

} // namespace rbg::thermal
