#include "claero/air.hpp"

#include <cmath>

namespace claero {

double sutherland_viscosity(double temperature, double mu_ref, double t_ref, double s) {
    if (!(temperature > 0.0)) {
        throw std::domain_error("sutherland_viscosity: temperature must be positive");
    }
    const double ratio = temperature / t_ref;
    return mu_ref * ratio * std::sqrt(ratio) * (t_ref + s) / (temperature + s);
}

double AirModel::saturation_pressure(double temperature) const {
    const double t_c = temperature - 273.15;
    const double p_mmhg = std::pow(10.0, antoine_a - antoine_b / (antoine_c + t_c));
    return 133.322 * p_mmhg;
}

double AirModel::vapor_diffusivity(double temperature) const {
    return vapor_diffusivity_ref * std::pow(temperature / 273.15, vapor_diffusivity_exp) *
           (101325.0 / pressure);
}

double AirModel::vapor_mass_fraction_from_mole(double x_v) const {
    const double m = x_v * molar_mass_water;
    return m / (m + (1.0 - x_v) * molar_mass_air);
}

double AirModel::vapor_mole_fraction_from_mass(double y_v) const {
    const double n = y_v / molar_mass_water;
    return n / (n + (1.0 - y_v) / molar_mass_air);
}

double AirModel::vapor_mass_fraction(double relative_humidity, double temperature) const {
    const double x_v = relative_humidity * saturation_pressure(temperature) / pressure;
    return vapor_mass_fraction_from_mole(x_v);
}

double AirModel::relative_humidity(double vapor_mass_fraction, double temperature) const {
    const double x_v = vapor_mole_fraction_from_mass(vapor_mass_fraction);
    return x_v * pressure / saturation_pressure(temperature);
}

}  // namespace claero
