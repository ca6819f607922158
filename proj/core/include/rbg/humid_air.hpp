#pragma once

namespace rbg {

/// Magnus saturation vapor pressure, Pa. T in degrees Celsius.
double saturation_pressure(double temp_c);

/// Absolute humidity, kg water vapor per kg dry air.
/// `rel_humidity` is a fraction in [0, 1]; `pressure_pa` must exceed the
/// partial vapor pressure.
double absolute_humidity(double temp_c, double rel_humidity, double pressure_pa);

/// Relative humidity fraction from absolute humidity at a given temperature.
double relative_humidity(double temp_c, double abs_humidity, double pressure_pa);

/// Specific enthalpy of humid air per kg dry air, J/kg.
double humid_air_enthalpy(double temp_c, double abs_humidity);

/// Temperature in Celsius from specific enthalpy and absolute humidity.
double humid_air_temperature(double enthalpy, double abs_humidity);

} // namespace rbg
