#include "quadspin/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quadspin/linalg.hpp"

namespace quadspin {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-12;

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  if (!m.is_hermitian(kHermitianTol)) {
    throw NotHermitian("density matrix is not Hermitian: max deviation " +
                       std::to_string(m.hermiticity_defect()));
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
    throw Error("density matrix trace deviates from 1 by " +
                std::to_string(std::abs(tr - Complex{1.0, 0.0})));
  }
  const auto eig = eig_hermitian(m);
  if (eig.eigenvalues.front() < kEigenvalueFloor) {
    throw NotPsd("density matrix has negative eigenvalue " +
                 std::to_string(eig.eigenvalues.front()));
  }
  return DensityMatrix(m);
}

DensityMatrix thermal_state(const ComplexMatrix& h) {
  const HermitianEigenDecomposition eig = eig_hermitian(h);
  const std::size_t n = h.dim();

  // Boltzmann weights relative to the ground level, so the largest
  // exponent is exactly zero.
  const double ground = eig.eigenvalues.front();
  std::vector<double> weights(n);
  double partition = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    weights[k] = std::exp(-(eig.eigenvalues[k] - ground));
    partition += weights[k];
  }

  ComplexMatrix rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += eig.eigenvectors(i, k) * (weights[k] / partition) *
               std::conj(eig.eigenvectors(j, k));
      }
      if (i == j) {
        rho(i, i) = Complex{sum.real(), 0.0};
      } else {
        rho(i, j) = sum;
        rho(j, i) = std::conj(sum);
      }
    }
  }
  return DensityMatrix::from_matrix(rho);
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw DimensionNotFour("spin flip is defined for dimension 4, got " +
                           std::to_string(rho.dim()));
  }
  ComplexMatrix g(4);
  g(0, 3) = -1.0;
  g(1, 2) = 1.0;
  g(2, 1) = 1.0;
  g(3, 0) = -1.0;
  return g * rho.matrix().conjugate() * g;
}

ConcurrenceResult concurrence(const DensityMatrix& rho) {
  const ComplexMatrix flipped = spin_flip(rho);
  const std::vector<double> lambdas = product_eigenvalues_psd(rho.matrix(), flipped);

  ConcurrenceResult out{};
  double sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    out.nu[k] = std::sqrt(lambdas[k]);
    sum += out.nu[k];
  }
  const double raw = 2.0 * out.nu[0] - sum;
  out.concurrence = std::clamp(raw, 0.0, 1.0);
  out.entangled = out.concurrence > 0.0;
  return out;
}

double magnetization(const DensityMatrix& rho, const SpinSystem& s) {
  if (rho.dim() != s.dim()) {
    throw DimensionMismatch("density matrix dimension " + std::to_string(rho.dim()) +
                            " does not match spin dimension " + std::to_string(s.dim()));
  }
  const Complex value = (rho.matrix() * s.iz()).trace();
  if (std::abs(value.imag()) >= 1e-12) {
    throw Error("magnetization has non-real value: imaginary part " +
                std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace quadspin
