#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "quadspin/linalg.hpp"
#include "test_util.hpp"

using quadspin::Complex;
using quadspin::ComplexMatrix;

namespace {

double reconstruction_error(const ComplexMatrix& m,
                            const quadspin::HermitianEigenDecomposition& eig) {
  const std::size_t n = m.dim();
  ComplexMatrix rebuilt(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += eig.eigenvectors(i, k) * eig.eigenvalues[k] * std::conj(eig.eigenvectors(j, k));
      }
      rebuilt(i, j) = sum;
    }
  }
  const double scale = std::max(m.frobenius_norm(), 1e-300);
  return (rebuilt - m).frobenius_norm() / scale;
}

double unitarity_error(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::identity(u.dim())).frobenius_norm();
}

ComplexMatrix random_psd(std::mt19937_64& rng, std::size_t dim) {
  const ComplexMatrix a = oracles::random_hermitian(rng, dim);
  return a * a;
}

}  // namespace

TEST_CASE("already diagonal matrix is returned as-is") {
  const double entries[] = {1.0, 2.0, 3.0, 4.0};
  const auto eig = quadspin::eig_hermitian(ComplexMatrix::diagonal(entries));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(eig.eigenvalues[k] == doctest::Approx(entries[k]).epsilon(1e-15));
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(std::abs(eig.eigenvectors(i, k) - (i == k ? 1.0 : 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("pauli-x spectrum") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  const auto eig = quadspin::eig_hermitian(m);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("random Hermitian eigenvalues match the characteristic-polynomial oracle") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix m = oracles::random_hermitian(rng, 4);
    const auto eig = quadspin::eig_hermitian(m);
    const auto reference = oracles::eigenvalues_via_charpoly(m);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(eig.eigenvalues[k] - reference[k]) < 1e-10);
    }
  }
}

TEST_CASE("reconstruction and unitarity invariants hold on random input") {
  std::mt19937_64 rng(7);
  for (std::size_t dim : {1u, 2u, 3u, 4u, 6u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix m = oracles::random_hermitian(rng, dim, 3.0);
      const auto eig = quadspin::eig_hermitian(m);
      CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
      CHECK(reconstruction_error(m, eig) < 1e-12);
      CHECK(unitarity_error(eig.eigenvectors) < 1e-12);
    }
  }
}

TEST_CASE("eigenvalue sum matches trace, product matches LU determinant") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    const ComplexMatrix m = oracles::random_hermitian(rng, 4);
    const auto eig = quadspin::eig_hermitian(m);

    double sum = 0.0, product = 1.0;
    for (double lambda : eig.eigenvalues) {
      sum += lambda;
      product *= lambda;
    }
    CHECK(std::abs(sum - m.trace().real()) < 1e-12 * std::max(1.0, std::abs(sum)));

    const Complex det = oracles::lu_determinant(m);
    CHECK(std::abs(det.imag()) < 1e-12);
    CHECK(std::abs(product - det.real()) < 1e-10 * std::max(1.0, std::abs(det.real())));
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;  // m(1, 0) stays 0
  CHECK_THROWS_AS((void)quadspin::eig_hermitian(m), quadspin::NotHermitian);
}

TEST_CASE("exponential of the zero matrix is the identity") {
  const ComplexMatrix zero(4);
  const ComplexMatrix e = quadspin::mat_exp_hermitian(zero, -3.7);
  CHECK((e - ComplexMatrix::identity(4)).frobenius_norm() < 1e-14);
}

TEST_CASE("exponential of a diagonal matrix") {
  const double entries[] = {1.0, -1.0};
  const ComplexMatrix e = quadspin::mat_exp_hermitian(ComplexMatrix::diagonal(entries), 1.0);
  CHECK(e(0, 0).real() == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(e(1, 1).real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(std::abs(e(0, 1)) < 1e-15);
}

TEST_CASE("exponential matches the scaled-and-squared Taylor oracle") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix m = oracles::random_hermitian(rng, 4, 2.0);
    const ComplexMatrix via_eig = quadspin::mat_exp_hermitian(m, -0.7);
    const ComplexMatrix via_taylor = oracles::taylor_exp(m, -0.7);
    CHECK((via_eig - via_taylor).frobenius_norm() <
          1e-10 * std::max(1.0, via_taylor.frobenius_norm()));
  }
}

TEST_CASE("exp(s) exp(-s) is the identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix m = oracles::random_hermitian(rng, 4, 2.0);
    const ComplexMatrix prod =
        quadspin::mat_exp_hermitian(m, 0.9) * quadspin::mat_exp_hermitian(m, -0.9);
    CHECK((prod - ComplexMatrix::identity(4)).frobenius_norm() < 1e-10);
  }
}

TEST_CASE("square root of simple PSD matrices") {
  CHECK((quadspin::mat_sqrt_psd(ComplexMatrix::identity(3)) - ComplexMatrix::identity(3))
            .frobenius_norm() < 1e-14);

  const double entries[] = {4.0, 9.0};
  const ComplexMatrix s = quadspin::mat_sqrt_psd(ComplexMatrix::diagonal(entries));
  CHECK(s(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("square root of a thermal state squares back") {
  const ComplexMatrix rho = testutil::thermal_rho(5.0, 5.0, 0.14, 0.94, 0.0).matrix();
  const ComplexMatrix s = quadspin::mat_sqrt_psd(rho);
  CHECK(s.is_hermitian(1e-13));
  CHECK((s * s - rho).frobenius_norm() < 1e-10);
}

TEST_CASE("clearly negative eigenvalues are rejected, roundoff is clamped") {
  const double bad[] = {1.0, -1e-6};
  CHECK_THROWS_AS((void)quadspin::mat_sqrt_psd(ComplexMatrix::diagonal(bad)), quadspin::NotPsd);

  const double borderline[] = {1.0, -1e-13};
  const ComplexMatrix s = quadspin::mat_sqrt_psd(ComplexMatrix::diagonal(borderline));
  CHECK(s(1, 1).real() == 0.0);
}

TEST_CASE("product eigenvalues of scaled identities") {
  const ComplexMatrix quarter = Complex{0.25, 0.0} * ComplexMatrix::identity(4);
  const auto values = quadspin::product_eigenvalues_psd(quarter, quarter);
  REQUIRE(values.size() == 4);
  for (double v : values) {
    CHECK(v == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  }
}

TEST_CASE("product with the identity returns the other spectrum") {
  std::mt19937_64 rng(5150);
  const ComplexMatrix b = random_psd(rng, 4);
  const auto values = quadspin::product_eigenvalues_psd(ComplexMatrix::identity(4), b);
  auto expected = quadspin::eig_hermitian(b).eigenvalues;
  std::sort(expected.begin(), expected.end(), std::greater<>());
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(values[k] == doctest::Approx(expected[k]).epsilon(1e-12));
  }
}

TEST_CASE("product eigenvalues match the direct-product charpoly oracle") {
  const quadspin::DensityMatrix rho = testutil::thermal_rho(5.0, 5.0, 0.14, 0.94, 0.0);
  const ComplexMatrix flipped = quadspin::spin_flip(rho);
  const auto via_similarity = quadspin::product_eigenvalues_psd(rho.matrix(), flipped);
  const auto via_charpoly = oracles::product_eigenvalues_via_charpoly(rho.matrix(), flipped);
  REQUIRE(via_charpoly.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(via_similarity[k] - via_charpoly[k]) < 1e-9);
  }
}

TEST_CASE("product eigenvalues are symmetric in the factors") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_psd(rng, 4);
    const ComplexMatrix b = random_psd(rng, 4);
    const auto ab = quadspin::product_eigenvalues_psd(a, b);
    const auto ba = quadspin::product_eigenvalues_psd(b, a);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(ab[k] - ba[k]) < 1e-10 * std::max(1.0, std::abs(ab[k])));
    }
  }
}

TEST_CASE("product eigenvalue dimensions must agree") {
  CHECK_THROWS_AS(
      (void)quadspin::product_eigenvalues_psd(ComplexMatrix::identity(4),
                                              ComplexMatrix::identity(3)),
      quadspin::DimensionMismatch);
}
