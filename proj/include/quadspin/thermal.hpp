#pragma once

#include <array>

#include "quadspin/complex_matrix.hpp"
#include "quadspin/spin_system.hpp"

namespace quadspin {

/// Hermitian, unit-trace, positive-semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12 max-abs), trace 1 (1e-12) and
  /// eigenvalues >= -1e-12.
  static DensityMatrix from_matrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return rho_; }
  std::size_t dim() const { return rho_.dim(); }

 private:
  explicit DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {}

  ComplexMatrix rho_;
};

/// Equilibrium state rho = exp(-h) / Tr(exp(-h)) for a Hermitian,
/// dimensionless exponent h. The spectrum is shifted so the largest
/// exponent is zero before exponentiating, so large couplings cannot
/// overflow.
DensityMatrix thermal_state(const ComplexMatrix& h);

/// The spin-flipped conjugate G conj(rho) G with
///   G = antidiag(-1, 1, 1, -1)
/// in the |3/2>, |1/2>, |-1/2>, |-3/2> basis. Defined for dim 4 only;
/// throws DimensionNotFour otherwise.
ComplexMatrix spin_flip(const DensityMatrix& rho);

struct ConcurrenceResult {
  double concurrence;          // in [0, 1]
  std::array<double, 4> nu;    // sqrt eigenvalues of rho * spin_flip(rho), descending
  bool entangled;              // concurrence > 0
};

/// Wootters concurrence of a 4x4 density matrix under the two-qubit
/// identification |3/2>,|1/2>,|-1/2>,|-3/2> <-> |00>,|01>,|10>,|11>:
///   C = max(0, 2 max(nu) - sum(nu)).
ConcurrenceResult concurrence(const DensityMatrix& rho);

/// Dimensionless magnetization Tr(rho * Iz), in units of hbar.
double magnetization(const DensityMatrix& rho, const SpinSystem& s);

}  // namespace quadspin
