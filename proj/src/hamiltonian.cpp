#include "quadspin/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace quadspin {

namespace {

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw OutOfRange("eta must lie in [0, 1], got " + std::to_string(eta));
  }
}

}  // namespace

Orientation::Orientation(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw OutOfRange("theta must lie in [0, pi], got " + std::to_string(theta));
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw OutOfRange("phi must lie in [0, 2*pi), got " + std::to_string(phi));
  }
}

Complex AngularFactors::at(int m) const {
  if (m < -2 || m > 2) {
    throw OutOfRange("angular factor index " + std::to_string(m) + " outside [-2, 2]");
  }
  return v[static_cast<std::size_t>(m + 2)];
}

AngularFactors angular_factors(const Orientation& o, double eta) {
  check_eta(eta);
  const double st = std::sin(o.theta());
  const double ct = std::cos(o.theta());
  const double s2t = std::sin(2.0 * o.theta());
  const double c2p = std::cos(2.0 * o.phi());
  const double s2p = std::sin(2.0 * o.phi());

  const Complex v0{(3.0 * ct * ct - 1.0) + eta * c2p * st * st, 0.0};
  const Complex vp1 = eta * st * Complex{ct * c2p, s2p} + Complex{1.5 * s2t, 0.0};
  const Complex vm1 = -(eta * st * Complex{ct * c2p, -s2p} + Complex{1.5 * s2t, 0.0});
  const Complex vp2{1.5 * st * st + eta * c2p * (1.0 + ct * ct), -0.5 * eta * s2p * ct};
  const Complex vm2{1.5 * st * st + eta * c2p * (1.0 + ct * ct), 0.5 * eta * s2p * ct};

  return AngularFactors{{vm2, vm1, v0, vp1, vp2}};
}

HamiltonianParams::HamiltonianParams(double alpha_in, double beta_in, double eta_in,
                                     Orientation orientation_in)
    : alpha(alpha_in), beta(beta_in), eta(eta_in), orientation(orientation_in) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw OutOfRange("alpha must be non-negative, got " + std::to_string(alpha));
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw OutOfRange("beta must be non-negative, got " + std::to_string(beta));
  }
  check_eta(eta);
}

ComplexMatrix build_hamiltonian(const HamiltonianParams& p, const SpinSystem& s,
                                const QuadrupoleTensor& qt) {
  if (s.dim() != qt.dim()) {
    throw DimensionMismatch("spin system and tensor dimensions differ");
  }
  const AngularFactors factors = angular_factors(p.orientation, p.eta);

  ComplexMatrix h = Complex{p.alpha, 0.0} * s.iz();
  for (int m = -2; m <= 2; ++m) {
    const double parity = (m % 2 == 0) ? 1.0 : -1.0;
    const Complex weight = p.beta * parity * factors.at(-m);
    if (weight == Complex{0.0, 0.0}) continue;
    h += weight * qt.q(m);
  }
  return h;
}

}  // namespace quadspin
