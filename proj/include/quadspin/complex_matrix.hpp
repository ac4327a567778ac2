#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "quadspin/errors.hpp"

namespace quadspin {

using Complex = std::complex<double>;

/// Dense square complex matrix with bounds-checked element access.
/// Row-major storage; dimension is fixed at construction and is at least 1.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> entries);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col);
  const Complex& operator()(std::size_t row, std::size_t col) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;

  /// Largest |m(i,j) - conj(m(j,i))| over all index pairs.
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex factor);

 private:
  void check_index(std::size_t row, std::size_t col) const;
  void check_same_dim(const ComplexMatrix& other) const;

  std::size_t dim_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex factor, ComplexMatrix m);
ComplexMatrix operator*(double factor, ComplexMatrix m);

}  // namespace quadspin
