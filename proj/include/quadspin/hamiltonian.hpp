#pragma once

#include <array>

#include "quadspin/complex_matrix.hpp"
#include "quadspin/spin_system.hpp"

namespace quadspin {

/// Polar/azimuthal angles of the laboratory z-axis (the field direction)
/// in the EFG principal axes frame. theta in [0, pi], phi in [0, 2*pi).
/// Out-of-range values are rejected, not wrapped.
class Orientation {
 public:
  Orientation(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  double theta_;
  double phi_;
};

/// Orientation factors multiplying the five tensor components of the
/// quadrupole coupling in the laboratory frame. Satisfies
/// conj(v(m)) = (-1)^m v(-m), which makes the coupling Hermitian.
struct AngularFactors {
  std::array<Complex, 5> v;  // m = -2 .. +2

  Complex at(int m) const;
};

AngularFactors angular_factors(const Orientation& o, double eta);

/// Dimensionless coupling strengths: alpha scales the Zeeman term,
/// beta the quadrupole term, both relative to k_B T. eta is the EFG
/// asymmetry. Construction validates alpha, beta >= 0 and eta in [0, 1].
struct HamiltonianParams {
  HamiltonianParams(double alpha, double beta, double eta, Orientation orientation);

  double alpha;
  double beta;
  double eta;
  Orientation orientation;
};

/// The dimensionless exponent h with rho ~ exp(-h):
///   h = alpha * Iz + beta * sum_m (-1)^m v(-m) q(m)
/// Hermitian for all valid parameters.
ComplexMatrix build_hamiltonian(const HamiltonianParams& p, const SpinSystem& s,
                                const QuadrupoleTensor& qt);

}  // namespace quadspin
