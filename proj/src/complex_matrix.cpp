#include "quadspin/complex_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace quadspin {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim < 1) {
    throw OutOfRange("matrix dimension must be at least 1");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m(i, i) = entries[i];
  }
  return m;
}

void ComplexMatrix::check_index(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) {
    throw OutOfRange("matrix index (" + std::to_string(row) + ", " + std::to_string(col) +
                     ") out of bounds for dimension " + std::to_string(dim_));
  }
}

void ComplexMatrix::check_same_dim(const ComplexMatrix& other) const {
  if (dim_ != other.dim_) {
    throw DimensionMismatch("matrix dimensions differ: " + std::to_string(dim_) + " vs " +
                            std::to_string(other.dim_));
  }
}

Complex& ComplexMatrix::operator()(std::size_t row, std::size_t col) {
  check_index(row, col);
  return data_[row * dim_ + col];
}

const Complex& ComplexMatrix::operator()(std::size_t row, std::size_t col) const {
  check_index(row, col);
  return data_[row * dim_ + col];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out.data_[j * dim_ + i] = std::conj(data_[i * dim_ + j]);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    out.data_[k] = std::conj(data_[k]);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    t += data_[i * dim_ + i];
  }
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : data_) {
    sum += std::norm(z);
  }
  return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double dev = std::abs(data_[i * dim_ + j] - std::conj(data_[j * dim_ + i]));
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  check_same_dim(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    data_[k] += rhs.data_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  check_same_dim(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    data_[k] -= rhs.data_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) {
  for (Complex& z : data_) {
    z *= factor;
  }
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw DimensionMismatch("matrix product dimensions differ: " + std::to_string(lhs.dim()) +
                            " vs " + std::to_string(rhs.dim()));
  }
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix operator*(Complex factor, ComplexMatrix m) {
  m *= factor;
  return m;
}

ComplexMatrix operator*(double factor, ComplexMatrix m) {
  m *= Complex{factor, 0.0};
  return m;
}

}  // namespace quadspin
