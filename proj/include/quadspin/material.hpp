#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadspin/hamiltonian.hpp"

namespace quadspin {

inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K

/// Nuclear site parameters. The quadrupole coupling is quoted as a
/// frequency (coupling energy over Planck's constant), the gyromagnetic
/// ratio as gamma / 2 pi.
struct MaterialPreset {
  std::string name;
  double quadrupole_coupling_mhz;      // eQ q_ZZ / h
  double eta;                          // EFG asymmetry
  double gyromagnetic_ratio_mhz_per_t; // gamma / 2 pi
  double quadrupole_moment_cm2;        // informational
};

/// Built-in presets for the two copper sites of YBa2Cu3O7-x (63Cu).
const std::vector<MaterialPreset>& builtin_presets();
std::optional<MaterialPreset> find_preset(std::string_view name);

/// How beta maps to a physical temperature.
///  - eq7:      beta = h * nu_Q / (4 I (2I - 1) k_B T)
///  - paper_mk: beta = h * nu_Q / (k_B T)
/// The two differ by the factor 4I(2I-1) (= 12 for I = 3/2).
enum class TemperatureConvention { eq7, paper_mk };

std::string_view to_string(TemperatureConvention c);

/// Dimensionless couplings for a field (tesla) and temperature (kelvin).
/// Throws NonPositiveTemperature if temperature <= 0, OutOfRange if field < 0.
HamiltonianParams params_from_physical(double field_tesla, double temperature_kelvin,
                                       const MaterialPreset& m, double spin,
                                       Orientation orientation,
                                       TemperatureConvention convention = TemperatureConvention::eq7);

/// Temperature in kelvin corresponding to a given beta.
double temperature_from_beta(double beta, const MaterialPreset& m, double spin,
                             TemperatureConvention convention);

}  // namespace quadspin
