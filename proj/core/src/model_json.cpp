#include "rbg/io/model_json.hpp"

#include "rbg/error.hpp"

namespace rbg::io {

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

Json illustrative_params_to_json(const thermal::IllustrativeParams& p) {
    return Json{
        {"windshield_mass_kg", p.windshield_mass_kg},
        {"windshield_area_m2", p.windshield_area_m2},
        {"windshield_thickness_m", p.windshield_thickness_m},
        {"windshield_cp_J_per_kgK", p.windshield_cp_J_per_kgK},
        {"windshield_conductivity_W_per_mK", p.windshield_conductivity_W_per_mK},
        {"roof_mass_kg", p.roof_mass_kg},
        {"roof_area_m2", p.roof_area_m2},
        {"roof_thickness_m", p.roof_thickness_m},
        {"roof_cp_J_per_kgK", p.roof_cp_J_per_kgK},
        {"roof_conductivity_W_per_mK", p.roof_conductivity_W_per_mK},
        {"h_int_W_per_m2K", p.h_int_W_per_m2K},
        {"h_ext_W_per_m2K", p.h_ext_W_per_m2K},
        {"lag_time_s", p.lag_time_s},
        {"ambient_temp_c", p.ambient_temp_c},
        {"cabin_setpoint_c", p.cabin_setpoint_c},
        {"mass_split", p.mass_split == thermal::WallMassSplit::Thirds ? "thirds" : "full_per_node"},
    };
}

thermal::IllustrativeParams illustrative_params_from_json(const Json& j) {
    thermal::IllustrativeParams p;
    auto get = [&](const char* key, double& field) {
        if (j.contains(key)) field = j.at(key).get<double>();
    };
    get("windshield_mass_kg", p.windshield_mass_kg);
    get("windshield_area_m2", p.windshield_area_m2);
    get("windshield_thickness_m", p.windshield_thickness_m);
    get("windshield_cp_J_per_kgK", p.windshield_cp_J_per_kgK);
    get("windshield_conductivity_W_per_mK", p.windshield_conductivity_W_per_mK);
    get("roof_mass_kg", p.roof_mass_kg);
    get("roof_area_m2", p.roof_area_m2);
    get("roof_thickness_m", p.roof_thickness_m);
    get("roof_cp_J_per_kgK", p.roof_cp_J_per_kgK);
    get("roof_conductivity_W_per_mK", p.roof_conductivity_W_per_mK);
    get("h_int_W_per_m2K", p.h_int_W_per_m2K);
    get("h_ext_W_per_m2K", p.h_ext_W_per_m2K);
    get("lag_time_s", p.lag_time_s);
    get("ambient_temp_c", p.ambient_temp_c);
    get("cabin_setpoint_c", p.cabin_setpoint_c);
    if (j.contains("mass_split")) {
        const std::string split = j.at("mass_split").get<std::string>();
        if (split == "thirds")
            p.mass_split = thermal::WallMassSplit::Thirds;
        else if (split == "full_per_node")
            p.mass_split = thermal::WallMassSplit::FullPerNode;
        else
            throw validation_error("mass_split must be 'full_per_node' or 'thirds'",
                                   {{"value", split}});
    }
    return p;
}

namespace {

Json doubles_to_json(const std::vector<double>& v) {
    Json arr = Json::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

std::vector<double> doubles_from_json(const Json& j) {
    std::vector<double> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(e.get<double>());
    return v;
}

} // namespace

Json multizone_config_to_json(const thermal::MultizoneConfig& c) {
    return Json{
        {"zones", c.zones},
        {"walls", c.walls},
        {"zone_volume_m3", doubles_to_json(c.zone_volume_m3)},
        {"wall_area_m2", doubles_to_json(c.wall_area_m2)},
        {"wall_conductance_W_per_K", doubles_to_json(c.wall_conductance_W_per_K)},
        {"inner_capacitance_J_per_K", doubles_to_json(c.inner_capacitance_J_per_K)},
        {"outer_capacitance_J_per_K", doubles_to_json(c.outer_capacitance_J_per_K)},
        {"h_int_W_per_m2K", doubles_to_json(c.h_int_W_per_m2K)},
        {"solar_absorptivity", doubles_to_json(c.solar_absorptivity)},
        {"solar_exposure", doubles_to_json(c.solar_exposure)},
        {"solar_interior_weight", doubles_to_json(c.solar_interior_weight)},
        {"emissivity_int", c.emissivity_int},
        {"emissivity_ext", c.emissivity_ext},
        {"window_transmissivity", c.window_transmissivity},
        {"glass_area_m2", c.glass_area_m2},
        {"h_ext_base_W_per_m2K", c.h_ext_base_W_per_m2K},
        {"h_ext_per_kmh", c.h_ext_per_kmh},
        {"flow_fraction", matrix_to_json(c.flow_fraction)},
        {"circulation_kg_s", doubles_to_json(c.circulation_kg_s)},
        {"inlet_fraction", doubles_to_json(c.inlet_fraction)},
        {"pressure_pa", c.pressure_pa},
        {"air_density_kg_m3", c.air_density_kg_m3},
        {"radiation", c.radiation},
        {"initial_temp_c", c.initial_temp_c},
        {"initial_rel_humidity", c.initial_rel_humidity},
    };
}

thermal::MultizoneConfig multizone_config_from_json(const Json& j) {
    thermal::MultizoneConfig c = thermal::MultizoneConfig::defaults();
    if (j.contains("zones")) c.zones = j.at("zones").get<Index>();
    if (j.contains("walls")) c.walls = j.at("walls").get<Index>();
    // a new layout invalidates the default per-element arrays
    if ((c.zones != 6 || c.walls != 24) && !j.contains("wall_area_m2")) {
        thermal::MultizoneConfig fresh;
        fresh.zones = c.zones;
        fresh.walls = c.walls;
        const Index nw = fresh.walls, na = fresh.zones;
        for (Index z = 0; z < na; ++z)
            fresh.zone_volume_m3.push_back(0.35 + 0.08 * static_cast<double>(z));
        for (Index w = 0; w < nw; ++w) {
            fresh.wall_area_m2.push_back(1.0 + 0.15 * static_cast<double>(w % 7));
            fresh.wall_conductance_W_per_K.push_back(30.0 + 7.0 * static_cast<double>(w % 5));
            fresh.inner_capacitance_J_per_K.push_back(3500.0 + 400.0 * static_cast<double>(w % 4));
            fresh.outer_capacitance_J_per_K.push_back(4000.0 + 300.0 * static_cast<double>(w % 3));
            fresh.h_int_W_per_m2K.push_back(8.0 + 1.5 * static_cast<double>(w % 3));
            fresh.solar_absorptivity.push_back(0.4 + 0.1 * static_cast<double>(w % 2));
            fresh.solar_exposure.push_back(0.4 + 0.2 * static_cast<double>(w % 4) / 3.0);
            fresh.solar_interior_weight.push_back(0.5 + 0.5 * static_cast<double>(w % 3));
        }
        fresh.flow_fraction = Matrix::Zero(na, na);
        for (Index z = 0; z < na; ++z) fresh.flow_fraction(z, (z + 1) % na) = 1.0;
        fresh.circulation_kg_s.assign(static_cast<size_t>(na), 0.02);
        double total = 0.0;
        for (Index z = 0; z < na; ++z) total += 1.0 + static_cast<double>(z % 3);
        for (Index z = 0; z < na; ++z)
            fresh.inlet_fraction.push_back((1.0 + static_cast<double>(z % 3)) / total);
        c = fresh;
    }
    auto get_vec = [&](const char* key, std::vector<double>& field) {
        if (j.contains(key)) field = doubles_from_json(j.at(key));
    };
    get_vec("zone_volume_m3", c.zone_volume_m3);
    get_vec("wall_area_m2", c.wall_area_m2);
    get_vec("wall_conductance_W_per_K", c.wall_conductance_W_per_K);
    get_vec("inner_capacitance_J_per_K", c.inner_capacitance_J_per_K);
    get_vec("outer_capacitance_J_per_K", c.outer_capacitance_J_per_K);
    get_vec("h_int_W_per_m2K", c.h_int_W_per_m2K);
    get_vec("solar_absorptivity", c.solar_absorptivity);
    get_vec("solar_exposure", c.solar_exposure);
    get_vec("solar_interior_weight", c.solar_interior_weight);
    get_vec("circulation_kg_s", c.circulation_kg_s);
    get_vec("inlet_fraction", c.inlet_fraction);
    auto get = [&](const char* key, double& field) {
        if (j.contains(key)) field = j.at(key).get<double>();
    };
    get("emissivity_int", c.emissivity_int);
    get("emissivity_ext", c.emissivity_ext);
    get("window_transmissivity", c.window_transmissivity);
    get("glass_area_m2", c.glass_area_m2);
    get("h_ext_base_W_per_m2K", c.h_ext_base_W_per_m2K);
    get("h_ext_per_kmh", c.h_ext_per_kmh);
    get("pressure_pa", c.pressure_pa);
    get("air_density_kg_m3", c.air_density_kg_m3);
    get("initial_temp_c", c.initial_temp_c);
    get("initial_rel_humidity", c.initial_rel_humidity);
    if (j.contains("flow_fraction")) c.flow_fraction = matrix_from_json(j.at("flow_fraction"));
    if (j.contains("radiation")) c.radiation = j.at("radiation").get<bool>();
    return c;
}

namespace {

DaeModelPtr build_from(const std::string& builder, const Json& parameters) {
    if (builder == kIllustrativeBuilder)
        return thermal::build_illustrative_cabin(illustrative_params_from_json(parameters));
    if (builder == kMultizoneBuilder)
        return thermal::build_multizone_demo(multizone_config_from_json(parameters));
    throw Error("unknown_builder", "no model builder named '" + builder + "'",
                {{"builder", builder}});
}

Json structure_block(const DaeModel& model) {
    const Incidence& inc = model.incidence();
    auto sparse_rows = [](Index rows, Index cols, auto&& bit) {
        Json out = Json::array();
        for (Index r = 0; r < rows; ++r) {
            Json row = Json::array();
            for (Index c = 0; c < cols; ++c)
                if (bit(r, c)) row.push_back(c + 1);
            out.push_back(std::move(row));
        }
        return out;
    };
    Json mixed = Json::array();
    for (const MixedPair& m : inc.mixed_pairs())
        mixed.push_back(Json::array({m.resid_row + 1, m.alg + 1, m.diff + 1}));

    Json names_d = Json::array(), names_a = Json::array(), names_i = Json::array();
    for (const auto& n : model.space().diff_names) names_d.push_back(n);
    for (const auto& n : model.space().alg_names) names_a.push_back(n);
    for (const auto& n : model.input_names()) names_i.push_back(n);

    return Json{
        {"differential", std::move(names_d)},
        {"algebraic", std::move(names_a)},
        {"inputs", std::move(names_i)},
        {"initial", vector_to_json(model.space().initial_diff)},
        {"scale", vector_to_json(model.space().diff_scale)},
        {"has_explicit_algebraic", model.has_explicit()},
        {"incidence",
         Json{{"alg_in_deriv", sparse_rows(model.diff_count(), model.alg_count(),
                                           [&](Index r, Index c) { return inc.alg_in_deriv(r, c); })},
              {"diff_in_deriv", sparse_rows(model.diff_count(), model.diff_count(),
                                            [&](Index r, Index c) { return inc.diff_in_deriv(r, c); })},
              {"diff_in_resid", sparse_rows(model.alg_count(), model.diff_count(),
                                            [&](Index r, Index c) { return inc.diff_in_resid(r, c); })},
              {"alg_in_resid", sparse_rows(model.alg_count(), model.alg_count(),
                                           [&](Index r, Index c) { return inc.alg_in_resid(r, c); })},
              {"mixed", std::move(mixed)}}},
    };
}

} // namespace

Json model_to_json(const std::string& builder, const Json& parameters) {
    DaeModelPtr model = build_from(builder, parameters);
    return Json{
        {"schema_version", 1},
        {"builder", builder},
        {"parameters", parameters},
        {"structure", structure_block(*model)},
    };
}

DaeModelPtr model_from_json(const Json& doc) {
    if (!doc.contains("schema_version") || doc.at("schema_version").get<int>() != 1)
        throw validation_error("unsupported model document schema version");
    return build_from(doc.at("builder").get<std::string>(),
                      doc.value("parameters", Json::object()));
}

Json apply_parameter_overrides(Json doc, const std::map<std::string, double>& overrides) {
    Json params = doc.value("parameters", Json::object());
    for (const auto& [key, value] : overrides) params[key] = value;
    return model_to_json(doc.at("builder").get<std::string>(), params);
}

InputSchedule default_schedule_for(const Json& doc) {
    const std::string builder = doc.at("builder").get<std::string>();
    if (builder == kIllustrativeBuilder)
        return thermal::illustrative_schedule(
            illustrative_params_from_json(doc.value("parameters", Json::object())));
    if (builder == kMultizoneBuilder) return thermal::multizone_schedule();
    throw Error("unknown_builder", "no model builder named '" + builder + "'");
}

std::string model_hash(const Json& doc) { return fnv1a_hex(doc.dump()); }

} // namespace rbg::io
