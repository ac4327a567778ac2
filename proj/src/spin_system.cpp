#include "quadspin/spin_system.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace quadspin {

namespace {

ComplexMatrix build_iz(double spin, std::size_t dim) {
  ComplexMatrix iz(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    iz(i, i) = spin - static_cast<double>(i);
  }
  return iz;
}

ComplexMatrix build_iplus(double spin, std::size_t dim) {
  // <m+1| I+ |m> = sqrt(I(I+1) - m(m+1)); row index of m is I - m.
  ComplexMatrix iplus(dim);
  for (std::size_t i = 1; i < dim; ++i) {
    const double m = spin - static_cast<double>(i);
    iplus(i - 1, i) = std::sqrt(spin * (spin + 1.0) - m * (m + 1.0));
  }
  return iplus;
}

}  // namespace

SpinSystem::SpinSystem(double spin)
    : spin_(spin), iz_(1), iplus_(1), iminus_(1) {
  const double two_i = 2.0 * spin;
  const double rounded = std::round(two_i);
  if (!(spin > 0.0) || !std::isfinite(spin) || std::abs(two_i - rounded) > 1e-9) {
    throw InvalidSpin("spin must be a positive multiple of 1/2, got " + std::to_string(spin));
  }
  const std::size_t dim = static_cast<std::size_t>(rounded) + 1;
  iz_ = build_iz(spin, dim);
  iplus_ = build_iplus(spin, dim);
  iminus_ = iplus_.adjoint();
}

QuadrupoleTensor::QuadrupoleTensor(std::array<ComplexMatrix, 5> components)
    : components_(std::move(components)) {
  for (const ComplexMatrix& c : components_) {
    if (c.dim() != components_[0].dim()) {
      throw DimensionMismatch("tensor components must share one dimension");
    }
  }
}

const ComplexMatrix& QuadrupoleTensor::q(int m) const {
  if (m < -2 || m > 2) {
    throw OutOfRange("tensor component index " + std::to_string(m) + " outside [-2, 2]");
  }
  return components_[static_cast<std::size_t>(m + 2)];
}

QuadrupoleTensor build_quadrupole_tensor(const SpinSystem& s) {
  const ComplexMatrix& iz = s.iz();
  const ComplexMatrix& ip = s.iplus();
  const ComplexMatrix& im = s.iminus();
  const double casimir = s.spin() * (s.spin() + 1.0);

  ComplexMatrix q0 = 3.0 * (iz * iz) - casimir * ComplexMatrix::identity(s.dim());
  q0 *= 0.5;
  ComplexMatrix qp1 = 0.5 * (iz * ip + ip * iz);
  ComplexMatrix qm1 = -0.5 * (iz * im + im * iz);
  ComplexMatrix qp2 = 0.5 * (ip * ip);
  ComplexMatrix qm2 = 0.5 * (im * im);

  return QuadrupoleTensor({std::move(qm2), std::move(qm1), std::move(q0),
                           std::move(qp1), std::move(qp2)});
}

}  // namespace quadspin
