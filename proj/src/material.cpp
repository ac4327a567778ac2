#include "quadspin/material.hpp"

#include <cmath>
#include <string>

namespace quadspin {

namespace {

// Denominator 4 I (2I - 1) of the quadrupole coupling normalization.
double coupling_denominator(double spin, TemperatureConvention convention) {
  if (convention == TemperatureConvention::paper_mk) {
    return 1.0;
  }
  return 4.0 * spin * (2.0 * spin - 1.0);
}

}  // namespace

const std::vector<MaterialPreset>& builtin_presets() {
  // 63Cu in the two copper sites of YBa2Cu3O7-x: the four-coordinated
  // planar site is strongly asymmetric, the five-coordinated pyramidal
  // site nearly axial.
  static const std::vector<MaterialPreset> presets = {
      {"cu63-4coord", 38.2, 0.92, 11.289, -0.211e-24},
      {"cu63-5coord", 62.8, 0.14, 11.289, -0.211e-24},
  };
  return presets;
}

std::optional<MaterialPreset> find_preset(std::string_view name) {
  for (const MaterialPreset& preset : builtin_presets()) {
    if (preset.name == name) {
      return preset;
    }
  }
  return std::nullopt;
}

std::string_view to_string(TemperatureConvention c) {
  return c == TemperatureConvention::eq7 ? "eq7" : "paper-mk";
}

HamiltonianParams params_from_physical(double field_tesla, double temperature_kelvin,
                                       const MaterialPreset& m, double spin,
                                       Orientation orientation,
                                       TemperatureConvention convention) {
  if (!(temperature_kelvin > 0.0)) {
    throw NonPositiveTemperature("temperature must be positive, got " +
                                 std::to_string(temperature_kelvin) + " K");
  }
  if (!(field_tesla >= 0.0)) {
    throw OutOfRange("field must be non-negative, got " + std::to_string(field_tesla) + " T");
  }
  const double thermal_energy = kBoltzmann * temperature_kelvin;
  const double zeeman_hz = m.gyromagnetic_ratio_mhz_per_t * 1e6 * field_tesla;
  const double coupling_hz = m.quadrupole_coupling_mhz * 1e6;

  const double alpha = kPlanck * zeeman_hz / thermal_energy;
  const double beta =
      kPlanck * coupling_hz / (coupling_denominator(spin, convention) * thermal_energy);
  return HamiltonianParams(alpha, beta, m.eta, orientation);
}

double temperature_from_beta(double beta, const MaterialPreset& m, double spin,
                             TemperatureConvention convention) {
  if (!(beta > 0.0)) {
    throw OutOfRange("beta must be positive, got " + std::to_string(beta));
  }
  const double coupling_hz = m.quadrupole_coupling_mhz * 1e6;
  return kPlanck * coupling_hz / (coupling_denominator(spin, convention) * kBoltzmann * beta);
}

}  // namespace quadspin
