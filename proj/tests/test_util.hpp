#pragma once

#include <cstdlib>
#include <vector>

#include "quadspin/hamiltonian.hpp"
#include "quadspin/spin_system.hpp"
#include "quadspin/thermal.hpp"

namespace testutil {

inline const quadspin::SpinSystem& spin32() {
  static const quadspin::SpinSystem system(1.5);
  return system;
}

inline const quadspin::QuadrupoleTensor& tensor32() {
  static const quadspin::QuadrupoleTensor tensor =
      quadspin::build_quadrupole_tensor(spin32());
  return tensor;
}

inline quadspin::ComplexMatrix build_h(double alpha, double beta, double eta, double theta,
                                       double phi) {
  const quadspin::HamiltonianParams params(alpha, beta, eta,
                                           quadspin::Orientation(theta, phi));
  return quadspin::build_hamiltonian(params, spin32(), tensor32());
}

inline quadspin::DensityMatrix thermal_rho(double alpha, double beta, double eta, double theta,
                                           double phi) {
  return quadspin::thermal_state(build_h(alpha, beta, eta, theta, phi));
}

inline std::vector<double> linspace(double start, double stop, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = (count == 1) ? start
             : (k == count - 1)
                 ? stop
                 : start + static_cast<double>(k) * (stop - start) /
                               static_cast<double>(count - 1);
  }
  return out;
}

}  // namespace testutil
