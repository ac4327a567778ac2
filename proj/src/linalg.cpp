#include "quadspin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace quadspin {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr int kMaxJacobiSweeps = 100;
constexpr double kOffDiagonalTarget = 1e-15;  // relative to the Frobenius norm

double off_diagonal_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t p = 0; p < m.dim(); ++p) {
    for (std::size_t q = p + 1; q < m.dim(); ++q) {
      sum += std::norm(m(p, q));
    }
  }
  return std::sqrt(2.0 * sum);
}

// One two-sided rotation zeroing m(p, q), accumulated into v.
// The 2x2 unitary is [[c, -conj(s)], [s, c]] with real c, applied to the
// (p, q) plane; s carries the phase of the eliminated entry.
void jacobi_rotate(ComplexMatrix& m, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = m(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) {
    return;
  }
  const double app = m(p, p).real();
  const double aqq = m(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
  const double t = (tau < 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex s = (t * c / r) * std::conj(apq);

  const std::size_t n = m.dim();
  for (std::size_t k = 0; k < n; ++k) {  // columns: A <- A U
    const Complex mp = m(k, p);
    const Complex mq = m(k, q);
    m(k, p) = c * mp + s * mq;
    m(k, q) = -std::conj(s) * mp + c * mq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // rows: A <- U† A
    const Complex mp = m(p, k);
    const Complex mq = m(q, k);
    m(p, k) = c * mp + std::conj(s) * mq;
    m(q, k) = -s * mp + c * mq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // eigenvectors: V <- V U
    const Complex vp = v(k, p);
    const Complex vq = v(k, q);
    v(k, p) = c * vp + s * vq;
    v(k, q) = -std::conj(s) * vp + c * vq;
  }
  m(p, q) = 0.0;
  m(q, p) = 0.0;
  m(p, p) = Complex{m(p, p).real(), 0.0};
  m(q, q) = Complex{m(q, q).real(), 0.0};
}

ComplexMatrix hermitized(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = Complex{m(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = z;
      out(j, i) = std::conj(z);
    }
  }
  return out;
}

// U f(diag) U† assembled symmetrically, so the result is exactly Hermitian.
ComplexMatrix assemble_spectral(const HermitianEigenDecomposition& eig,
                                const std::vector<double>& f) {
  const std::size_t n = eig.eigenvectors.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += eig.eigenvectors(i, k) * f[k] * std::conj(eig.eigenvectors(j, k));
      }
      if (i == j) {
        out(i, i) = Complex{sum.real(), 0.0};
      } else {
        out(i, j) = sum;
        out(j, i) = std::conj(sum);
      }
    }
  }
  return out;
}

}  // namespace

HermitianEigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  if (!m.is_hermitian(kHermitianTol)) {
    throw NotHermitian("matrix is not Hermitian: max deviation " +
                       std::to_string(m.hermiticity_defect()));
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = hermitized(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = kOffDiagonalTarget * std::max(a.frobenius_norm(), 1e-300);
  int sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweeps > kMaxJacobiSweeps) {
      throw NoConvergence("Jacobi iteration did not converge in " +
                          std::to_string(kMaxJacobiSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        jacobi_rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t lhs, std::size_t rhs) {
    return a(lhs, lhs).real() < a(rhs, rhs).real();
  });

  HermitianEigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, k) = v(i, order[k]);
    }
  }
  return out;
}

ComplexMatrix mat_exp_hermitian(const ComplexMatrix& m, double scale) {
  const HermitianEigenDecomposition eig = eig_hermitian(m);
  std::vector<double> f(eig.eigenvalues.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    f[k] = std::exp(scale * eig.eigenvalues[k]);
  }
  return assemble_spectral(eig, f);
}

ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m) {
  const HermitianEigenDecomposition eig = eig_hermitian(m);
  std::vector<double> f(eig.eigenvalues.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -1e-9) {
      throw NotPsd("matrix has negative eigenvalue " + std::to_string(lambda));
    }
    f[k] = std::sqrt(std::max(lambda, 0.0));
  }
  return assemble_spectral(eig, f);
}

std::vector<double> product_eigenvalues_psd(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("product eigenvalues need equal dimensions, got " +
                            std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  const ComplexMatrix root = mat_sqrt_psd(a);
  const ComplexMatrix similar = hermitized(root * b * root);

  std::vector<double> values = eig_hermitian(similar).eigenvalues;
  for (double& lambda : values) {
    if (lambda < -1e-9) {
      throw NotPsd("product eigenvalue " + std::to_string(lambda) + " below PSD tolerance");
    }
    lambda = std::max(lambda, 0.0);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace quadspin
