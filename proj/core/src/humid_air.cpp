#include "rbg/humid_air.hpp"

#include "rbg/error.hpp"

#include <cmath>

namespace rbg {

namespace {
constexpr double kCpDryAir = 1004.0;      // J/(kg K)
constexpr double kCpVapor = 1860.0;       // J/(kg K)
constexpr double kLatentHeat = 2.501e6;   // J/kg at 0 degC
constexpr double kMassRatio = 0.622;      // M_water / M_dry_air
} // namespace

double saturation_pressure(double temp_c) {
    return 610.94 * std::exp(17.625 * temp_c / (temp_c + 243.04));
}

double absolute_humidity(double temp_c, double rel_humidity, double pressure_pa) {
    if (rel_humidity < 0.0 || rel_humidity > 1.0)
        throw validation_error("relative humidity must lie in [0, 1]",
                               {{"value", rel_humidity}});
    const double pv = rel_humidity * saturation_pressure(temp_c);
    if (!(pressure_pa > pv))
        throw validation_error("total pressure must exceed the vapor partial pressure",
                               {{"pressure_pa", pressure_pa}, {"vapor_pa", pv}});
    return kMassRatio * pv / (pressure_pa - pv);
}

double relative_humidity(double temp_c, double abs_humidity, double pressure_pa) {
    const double pv = pressure_pa * abs_humidity / (kMassRatio + abs_humidity);
    return pv / saturation_pressure(temp_c);
}

double humid_air_enthalpy(double temp_c, double abs_humidity) {
    return kCpDryAir * temp_c + abs_humidity * (kLatentHeat + kCpVapor * temp_c);
}

double humid_air_temperature(double enthalpy, double abs_humidity) {
    return (enthalpy - kLatentHeat * abs_humidity) / (kCpDryAir + kCpVapor * abs_humidity);
}

} // namespace rbg
