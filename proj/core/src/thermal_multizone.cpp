#include "rbg/thermal/multizone.hpp"

#include "rbg/error.hpp"
#include "rbg/humid_air.hpp"

#include <cmath>

namespace rbg::thermal {

namespace {
constexpr double kSigma = 5.67e-8;   // W/(m2 K4)
constexpr double kKelvin = 273.15;

enum MuIdx { kVVeh = 0, kTExt, kRExt, kISol, kMdotInlet, kRInlet, kTInlet };

std::string num_name(const char* prefix, Index i) {
    return std::string(prefix) + "_" + std::to_string(i + 1);
}
} // namespace

MultizoneConfig MultizoneConfig::defaults() {
    MultizoneConfig c;
    const Index nw = c.walls;
    const Index na = c.zones;
    for (Index z = 0; z < na; ++z) c.zone_volume_m3.push_back(0.35 + 0.08 * static_cast<double>(z));
    for (Index w = 0; w < nw; ++w) {
        c.wall_area_m2.push_back(1.0 + 0.15 * static_cast<double>(w % 7));
        c.wall_conductance_W_per_K.push_back(30.0 + 7.0 * static_cast<double>(w % 5));
        c.inner_capacitance_J_per_K.push_back(3500.0 + 400.0 * static_cast<double>(w % 4));
        c.outer_capacitance_J_per_K.push_back(4000.0 + 300.0 * static_cast<double>(w % 3));
        c.h_int_W_per_m2K.push_back(8.0 + 1.5 * static_cast<double>(w % 3));
        c.solar_absorptivity.push_back(0.4 + 0.1 * static_cast<double>(w % 2));
        c.solar_exposure.push_back(0.4 + 0.2 * static_cast<double>(w % 4) / 3.0);
        c.solar_interior_weight.push_back(0.5 + 0.5 * static_cast<double>(w % 3));
    }
    c.flow_fraction = Matrix::Zero(na, na);
    for (Index z = 0; z < na; ++z) c.flow_fraction(z, (z + 1) % na) = 1.0;
    c.circulation_kg_s.assign(static_cast<size_t>(na), 0.02);
    double total = 0.0;
    for (Index z = 0; z < na; ++z) total += 1.0 + static_cast<double>(z % 3);
    for (Index z = 0; z < na; ++z)
        c.inlet_fraction.push_back((1.0 + static_cast<double>(z % 3)) / total);
    return c;
}

void MultizoneConfig::validate() const {
    if (zones < 1 || walls < 1 || walls % zones != 0)
        throw validation_error("wall count must be a positive multiple of the zone count",
                               {{"zones", zones}, {"walls", walls}});
    auto check_size = [&](size_t got, Index want, const char* name) {
        if (got != static_cast<size_t>(want))
            throw validation_error(std::string(name) + " must have one entry per element",
                                   {{"got", got}, {"want", want}});
    };
    check_size(zone_volume_m3.size(), zones, "zone_volume_m3");
    check_size(wall_area_m2.size(), walls, "wall_area_m2");
    check_size(wall_conductance_W_per_K.size(), walls, "wall_conductance_W_per_K");
    check_size(inner_capacitance_J_per_K.size(), walls, "inner_capacitance_J_per_K");
    check_size(outer_capacitance_J_per_K.size(), walls, "outer_capacitance_J_per_K");
    check_size(h_int_W_per_m2K.size(), walls, "h_int_W_per_m2K");
    check_size(solar_absorptivity.size(), walls, "solar_absorptivity");
    check_size(solar_exposure.size(), walls, "solar_exposure");
    check_size(solar_interior_weight.size(), walls, "solar_interior_weight");
    check_size(circulation_kg_s.size(), zones, "circulation_kg_s");
    check_size(inlet_fraction.size(), zones, "inlet_fraction");

    if (flow_fraction.rows() != zones || flow_fraction.cols() != zones)
        throw validation_error("flow_fraction must be zones x zones");
    for (Index z = 0; z < zones; ++z) {
        if (flow_fraction(z, z) != 0.0)
            throw validation_error("flow_fraction diagonal must be zero", {{"zone", z}});
        double row = 0.0;
        for (Index z2 = 0; z2 < zones; ++z2) {
            if (flow_fraction(z, z2) < 0.0)
                throw validation_error("flow fractions must be non-negative",
                                       {{"zone", z}, {"to", z2}});
            row += flow_fraction(z, z2);
        }
        if (row > 1.0 + 1e-12)
            throw validation_error("flow fractions out of a zone must sum to at most 1",
                                   {{"zone", z}, {"sum", row}});
    }
    // zone-to-zone flows must balance so the dry-air mass per zone stays put
    for (Index z = 0; z < zones; ++z) {
        double in = 0.0;
        for (Index z2 = 0; z2 < zones; ++z2)
            in += circulation_kg_s[static_cast<size_t>(z2)] * flow_fraction(z2, z);
        double out = 0.0;
        for (Index z2 = 0; z2 < zones; ++z2)
            out += circulation_kg_s[static_cast<size_t>(z)] * flow_fraction(z, z2);
        if (std::abs(in - out) > 1e-9)
            throw validation_error("zone-to-zone circulation must balance per zone",
                                   {{"zone", z}, {"in_kg_s", in}, {"out_kg_s", out}});
    }
    double inlet_sum = 0.0;
    for (double f : inlet_fraction) {
        if (f < 0.0) throw validation_error("inlet fractions must be non-negative");
        inlet_sum += f;
    }
    if (std::abs(inlet_sum - 1.0) > 1e-9)
        throw validation_error("inlet fractions must sum to 1", {{"sum", inlet_sum}});
    if (initial_rel_humidity < 0.0 || initial_rel_humidity > 1.0)
        throw validation_error("initial relative humidity must lie in [0, 1]");
    if (!(air_density_kg_m3 > 0.0))
        throw validation_error("air density must be positive");
}

DaeModelPtr build_multizone_demo(const MultizoneConfig& c) {
    c.validate();
    const Index nw = c.walls;
    const Index na = c.zones;
    const Index wpz = nw / na;

    // radiation pairs: ring over the internal walls of each zone
    std::vector<std::pair<Index, Index>> pairs;
    if (c.radiation && wpz >= 2) {
        for (Index z = 0; z < na; ++z) {
            const Index base = z * wpz;
            if (wpz == 2) {
                pairs.emplace_back(base, base + 1);
            } else {
                for (Index i = 0; i < wpz; ++i)
                    pairs.emplace_back(base + i, base + (i + 1) % wpz);
            }
        }
    }
    const Index npairs = static_cast<Index>(pairs.size());

    // state layout
    const Index twi0 = 0, twe0 = nw, h0 = 2 * nw, x0 = 2 * nw + na;
    // algebraic layout
    const Index conv0 = 0, cond0 = nw, cext0 = 2 * nw;
    const Index rext0 = c.radiation ? 3 * nw : -1;
    const Index rad0 = c.radiation ? 4 * nw : 3 * nw;
    const Index ta0 = rad0 + npairs;
    const Index r0 = ta0 + na;
    const Index nalg = r0 + na;

    std::vector<std::string> diff_names, alg_names;
    for (Index w = 0; w < nw; ++w) diff_names.push_back(num_name("T_wi", w));
    for (Index w = 0; w < nw; ++w) diff_names.push_back(num_name("T_we", w));
    for (Index z = 0; z < na; ++z) diff_names.push_back(num_name("h", z));
    for (Index z = 0; z < na; ++z) diff_names.push_back(num_name("x", z));
    for (Index w = 0; w < nw; ++w) alg_names.push_back(num_name("Q_conv", w));
    for (Index w = 0; w < nw; ++w) alg_names.push_back(num_name("Q_cond", w));
    for (Index w = 0; w < nw; ++w) alg_names.push_back(num_name("Q_cext", w));
    if (c.radiation)
        for (Index w = 0; w < nw; ++w) alg_names.push_back(num_name("Q_rext", w));
    for (Index p = 0; p < npairs; ++p) alg_names.push_back(num_name("Q_rad", p));
    for (Index z = 0; z < na; ++z) alg_names.push_back(num_name("T_a", z));
    for (Index z = 0; z < na; ++z) alg_names.push_back(num_name("r_a", z));

    const double x_init =
        absolute_humidity(c.initial_temp_c, c.initial_rel_humidity, c.pressure_pa);
    const double h_init = humid_air_enthalpy(c.initial_temp_c, x_init);
    Vector initial(2 * (nw + na));
    initial.head(2 * nw).setConstant(c.initial_temp_c);
    initial.segment(h0, na).setConstant(h_init);
    initial.segment(x0, na).setConstant(x_init);

    // homogeneous multiphysics scaling: enthalpies down by the dry-air heat
    // capacity, humidities from kg/kg to g/kg
    Vector scale = Vector::Ones(2 * (nw + na));
    scale.segment(h0, na).setConstant(1e-3);
    scale.segment(x0, na).setConstant(1e3);

    VariableSpace space = VariableSpace::make(std::move(diff_names), std::move(alg_names),
                                              std::move(initial), std::move(scale));
    DaeModelBuilder b(std::move(space),
                      {"V_veh", "T_ext", "r_ext", "I_sol", "mdot_inlet", "r_inlet", "T_inlet"});

    double weight_total = 0.0;
    for (double w : c.solar_interior_weight) weight_total += w;

    // internal wall nodes
    for (Index w = 0; w < nw; ++w) {
        const double cap = c.inner_capacitance_J_per_K[static_cast<size_t>(w)];
        const double sol_gain = c.window_transmissivity * c.glass_area_m2 *
                                c.solar_interior_weight[static_cast<size_t>(w)] / weight_total;
        IndexList alg_reads = {conv0 + w, cond0 + w};
        std::vector<std::pair<Index, double>> rad_terms;  // (alg index, sign)
        for (Index p = 0; p < npairs; ++p) {
            if (pairs[static_cast<size_t>(p)].first == w) rad_terms.emplace_back(rad0 + p, -1.0);
            if (pairs[static_cast<size_t>(p)].second == w) rad_terms.emplace_back(rad0 + p, 1.0);
        }
        for (const auto& [ix, sign] : rad_terms) alg_reads.push_back(ix);
        b.deriv(twi0 + w,
                [cap, sol_gain, conv0, cond0, w, rad_terms](const Vector&, const Vector& g,
                                                            const Vector& mu, double) {
                    double q = g[conv0 + w] - g[cond0 + w] + sol_gain * mu[kISol];
                    for (const auto& [ix, sign] : rad_terms) q += sign * g[ix];
                    return q / cap;
                },
                std::move(alg_reads));
    }

    // external wall nodes
    for (Index w = 0; w < nw; ++w) {
        const double cap = c.outer_capacitance_J_per_K[static_cast<size_t>(w)];
        const double sol_gain = c.solar_absorptivity[static_cast<size_t>(w)] *
                                c.solar_exposure[static_cast<size_t>(w)] *
                                c.wall_area_m2[static_cast<size_t>(w)];
        IndexList alg_reads = {cond0 + w, cext0 + w};
        if (c.radiation) alg_reads.push_back(rext0 + w);
        const bool rad = c.radiation;
        b.deriv(twe0 + w,
                [cap, sol_gain, cond0, cext0, rext0, w, rad](const Vector&, const Vector& g,
                                                             const Vector& mu, double) {
                    double q = g[cond0 + w] - g[cext0 + w] + sol_gain * mu[kISol];
                    if (rad) q -= g[rext0 + w];
                    return q / cap;
                },
                std::move(alg_reads));
    }

    // zone balances; inflow terms cancel against extraction because the
    // dry-air mass per zone is constant
    for (Index z = 0; z < na; ++z) {
        const double mass = c.air_density_kg_m3 * c.zone_volume_m3[static_cast<size_t>(z)];
        const double inlet_frac = c.inlet_fraction[static_cast<size_t>(z)];
        std::vector<std::pair<Index, double>> inflows;  // (zone, kg/s)
        for (Index z2 = 0; z2 < na; ++z2) {
            const double rate =
                c.circulation_kg_s[static_cast<size_t>(z2)] * c.flow_fraction(z2, z);
            if (rate > 0.0) inflows.emplace_back(z2, rate);
        }
        IndexList h_reads = {h0 + z};
        IndexList x_reads = {x0 + z};
        for (const auto& [z2, rate] : inflows) {
            h_reads.push_back(h0 + z2);
            x_reads.push_back(x0 + z2);
        }
        IndexList conv_reads;
        for (Index w = z * wpz; w < (z + 1) * wpz; ++w) conv_reads.push_back(conv0 + w);

        const double pressure = c.pressure_pa;
        b.deriv(h0 + z,
                [mass, inlet_frac, inflows, h0, z, conv_reads, pressure](
                    const Vector& th, const Vector& g, const Vector& mu, double) {
                    const double x_in =
                        absolute_humidity(mu[kTInlet], mu[kRInlet] / 100.0, pressure);
                    const double h_in = humid_air_enthalpy(mu[kTInlet], x_in);
                    const double mdot = mu[kMdotInlet] / 3600.0;
                    double q = mdot * inlet_frac * (h_in - th[h0 + z]);
                    for (const auto& [z2, rate] : inflows)
                        q += rate * (th[h0 + z2] - th[h0 + z]);
                    for (Index ix : conv_reads) q -= g[ix];
                    return q / mass;
                },
                conv_reads, h_reads);
        b.deriv(x0 + z,
                [mass, inlet_frac, inflows, x0, z, pressure](const Vector& th, const Vector&,
                                                             const Vector& mu, double) {
                    const double x_in =
                        absolute_humidity(mu[kTInlet], mu[kRInlet] / 100.0, pressure);
                    const double mdot = mu[kMdotInlet] / 3600.0;
                    double q = mdot * inlet_frac * (x_in - th[x0 + z]);
                    for (const auto& [z2, rate] : inflows)
                        q += rate * (th[x0 + z2] - th[x0 + z]);
                    return q / mass;
                },
                {}, x_reads);
    }

    // explicit flux rows (residuals derived from them)
    auto add_alg = [&b](Index row, ExplicitRow expr, IndexList diff_reads,
                        IndexList alg_reads = {}) {
        b.explicit_alg(row, expr);
        b.resid(row,
                [expr, row](const Vector& th, const Vector& g, const Vector& mu) {
                    return expr(th, g, mu) - g[row];
                },
                std::move(diff_reads), std::move(alg_reads));
    };

    for (Index w = 0; w < nw; ++w) {
        const Index z = c.wall_zone(w);
        const double hs = c.h_int_W_per_m2K[static_cast<size_t>(w)] *
                          c.wall_area_m2[static_cast<size_t>(w)];
        // convection against the zone air temperature, written directly in
        // terms of the zone state so the flux row reads no other algebraic
        // variable
        add_alg(conv0 + w,
                [hs, h0, x0, twi0, z, w](const Vector& th, const Vector&, const Vector&) {
                    const double t_air = humid_air_temperature(th[h0 + z], th[x0 + z]);
                    return hs * (t_air - th[twi0 + w]);
                },
                {h0 + z, x0 + z, twi0 + w});
        const double k = c.wall_conductance_W_per_K[static_cast<size_t>(w)];
        add_alg(cond0 + w,
                [k, twi0, twe0, w](const Vector& th, const Vector&, const Vector&) {
                    return k * (th[twi0 + w] - th[twe0 + w]);
                },
                {twi0 + w, twe0 + w});
        const double area = c.wall_area_m2[static_cast<size_t>(w)];
        const double hb = c.h_ext_base_W_per_m2K, hv = c.h_ext_per_kmh;
        add_alg(cext0 + w,
                [area, hb, hv, twe0, w](const Vector& th, const Vector&, const Vector& mu) {
                    return (hb + hv * mu[kVVeh]) * area * (th[twe0 + w] - mu[kTExt]);
                },
                {twe0 + w});
        if (c.radiation) {
            const double es = c.emissivity_ext * kSigma * area;
            add_alg(rext0 + w,
                    [es, twe0, w](const Vector& th, const Vector&, const Vector& mu) {
                        const double tw = th[twe0 + w] + kKelvin;
                        const double te = mu[kTExt] + kKelvin;
                        return es * (tw * tw * tw * tw - te * te * te * te);
                    },
                    {twe0 + w});
        }
    }
    for (Index p = 0; p < npairs; ++p) {
        const auto [a, bw] = pairs[static_cast<size_t>(p)];
        const double es = c.emissivity_int * kSigma *
                          std::min(c.wall_area_m2[static_cast<size_t>(a)],
                                   c.wall_area_m2[static_cast<size_t>(bw)]);
        add_alg(rad0 + p,
                [es, twi0, a, bw](const Vector& th, const Vector&, const Vector&) {
                    const double ta = th[twi0 + a] + kKelvin;
                    const double tb = th[twi0 + bw] + kKelvin;
                    return es * (ta * ta * ta * ta - tb * tb * tb * tb);
                },
                {twi0 + a, twi0 + bw});
    }
    for (Index z = 0; z < na; ++z) {
        add_alg(ta0 + z,
                [h0, x0, z](const Vector& th, const Vector&, const Vector&) {
                    return humid_air_temperature(th[h0 + z], th[x0 + z]);
                },
                {h0 + z, x0 + z});
        const double pressure = c.pressure_pa;
        // relative humidity in percent; multiplicative coupling of the zone
        // air temperature and the humidity state
        add_alg(r0 + z,
                [pressure, ta0, x0, z](const Vector& th, const Vector& g, const Vector&) {
                    return 100.0 * relative_humidity(g[ta0 + z], th[x0 + z], pressure);
                },
                {x0 + z}, {ta0 + z});
        b.mixed(r0 + z, ta0 + z, x0 + z);
    }

    (void)nalg;
    return b.build();
}

InputSchedule multizone_schedule() {
    InputSchedule s;
    s.set("V_veh", 50.0);
    s.set("T_ext", 35.0);
    s.set("r_ext", 40.0);
    s.set("I_sol", 700.0);
    s.set("mdot_inlet", 450.0);
    s.set("r_inlet", 30.0);
    s.set("T_inlet", 8.0);
    return s;
}

} // namespace rbg::thermal
