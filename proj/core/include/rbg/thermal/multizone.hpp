#pragma once

#include "rbg/dae_model.hpp"
#include "rbg/input_schedule.hpp"

namespace rbg::thermal {

/// Synthetic multi-zone cabin: two temperature nodes per wall, humid-air
/// zones balancing specific enthalpy and absolute humidity, fourth-power
/// longwave radiation, speed-dependent external convection, solar gains and
/// a zone-to-zone ventilation ring. Parameters are fabricated at plausible
/// automotive magnitudes; the model exists to exercise nonlinearity,
/// humidity handling and reduction speedup, not to match any real vehicle.
///
/// State ordering: internal wall temperatures, external wall temperatures,
/// zone specific enthalpies, zone absolute humidities. Input channels:
/// V_veh (km/h), T_ext (degC), r_ext (%), I_sol (W/m2), mdot_inlet (kg/h),
/// r_inlet (%), T_inlet (degC).
struct MultizoneConfig {
    Index zones = 6;
    Index walls = 24;  // must divide evenly into zones

    std::vector<double> zone_volume_m3;                // per zone
    std::vector<double> wall_area_m2;                  // per wall
    std::vector<double> wall_conductance_W_per_K;      // per wall
    std::vector<double> inner_capacitance_J_per_K;     // per wall
    std::vector<double> outer_capacitance_J_per_K;     // per wall
    std::vector<double> h_int_W_per_m2K;               // per wall
    std::vector<double> solar_absorptivity;            // per wall
    std::vector<double> solar_exposure;                // per wall, 0..1
    std::vector<double> solar_interior_weight;         // per wall, normalized on build

    double emissivity_int = 0.85;
    double emissivity_ext = 0.80;
    double window_transmissivity = 0.10;
    double glass_area_m2 = 2.5;
    double h_ext_base_W_per_m2K = 5.0;
    double h_ext_per_kmh = 0.6;

    /// flow_fraction(z, z2) = share of zone z's circulation sent to z2.
    /// Rows must sum to at most 1 with zero diagonal, and the resulting
    /// zone-to-zone flows must balance per zone.
    Matrix flow_fraction;
    std::vector<double> circulation_kg_s;  // outflow rate per zone
    std::vector<double> inlet_fraction;    // per zone, sums to 1

    double pressure_pa = 101325.0;
    double air_density_kg_m3 = 1.15;  // dry air mass per zone = density * volume
    bool radiation = true;

    double initial_temp_c = 35.0;     // hot-soaked start, shared by all points
    double initial_rel_humidity = 0.40;

    /// Heterogeneous default layout (6 zones, 24 walls).
    static MultizoneConfig defaults();

    void validate() const;
    Index wall_zone(Index wall) const { return wall / (walls / zones); }
};

DaeModelPtr build_multizone_demo(const MultizoneConfig& config = MultizoneConfig::defaults());

/// A moderate cooling scenario for all seven input channels.
InputSchedule multizone_schedule();

} // namespace rbg::thermal
