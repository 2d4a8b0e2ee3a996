#pragma once

#include <stdexcept>

namespace claero {

/// Gas-phase property set for humid air. Values are configurable; the
/// defaults below mirror configs/default.yaml.
struct AirModel {
    double pressure = 101325.0;        // Pa, ambient total pressure
    double molar_mass_air = 28.964e-3; // kg/mol
    double molar_mass_water = 18.015e-3;
    double gas_constant = 8.314462618; // J/(mol K)

    // Sutherland's law constants for air.
    double mu_ref = 1.716e-5; // Pa s at T_ref
    double sutherland_t_ref = 273.15;
    double sutherland_s = 110.4;

    // Antoine correlation for water over 0-50 C (pressure in mmHg, T in C).
    double antoine_a = 8.07131;
    double antoine_b = 1730.63;
    double antoine_c = 233.426;

    // Binary diffusivity of water vapor in air, D = D_ref (T/273.15)^1.94 (p0/p).
    double vapor_diffusivity_ref = 2.11e-5; // m^2/s
    double vapor_diffusivity_exp = 1.94;

    double thermal_conductivity = 0.0263; // W/(m K), air near 300 K
    double cp_air = 1006.0;               // J/(kg K)

    double density(double temperature) const {
        return pressure * molar_mass_air / (gas_constant * temperature);
    }

    double saturation_pressure(double temperature) const; // Pa
    double vapor_diffusivity(double temperature) const;   // m^2/s

    /// Mole fraction of vapor -> mass fraction in the air/vapor mixture.
    double vapor_mass_fraction_from_mole(double x_v) const;
    double vapor_mole_fraction_from_mass(double y_v) const;

    /// Mass fraction of vapor at a given relative humidity and temperature.
    double vapor_mass_fraction(double relative_humidity, double temperature) const;

    /// Relative humidity implied by a vapor mass fraction at a temperature.
    double relative_humidity(double vapor_mass_fraction, double temperature) const;
};

/// Dynamic viscosity of air by Sutherland's law. Throws on T <= 0.
double sutherland_viscosity(double temperature,
                            double mu_ref = 1.716e-5,
                            double t_ref = 273.15,
                            double s = 110.4);

}  // namespace claero
