#pragma once

#include <array>
#include <cstddef>

#include "quadspin/complex_matrix.hpp"

namespace quadspin {

/// Angular-momentum operator matrices for a single spin I (integer or
/// half-integer), in units of hbar = 1. The basis is ordered by descending
/// magnetic quantum number: |I>, |I-1>, ..., |-I>.
class SpinSystem {
 public:
  /// Throws InvalidSpin unless 2I is a positive integer.
  explicit SpinSystem(double spin);

  double spin() const { return spin_; }
  std::size_t dim() const { return iz_.dim(); }

  const ComplexMatrix& iz() const { return iz_; }
  const ComplexMatrix& iplus() const { return iplus_; }
  const ComplexMatrix& iminus() const { return iminus_; }

 private:
  double spin_;
  ComplexMatrix iz_;
  ComplexMatrix iplus_;
  ComplexMatrix iminus_;
};

/// Second-rank tensor operators built from the spin matrices:
///   q0   = (3 Iz^2 - I(I+1)) / 2
///   q+-1 = +-(Iz I+- + I+- Iz) / 2
///   q+-2 = I+-^2 / 2
/// Satisfies q(m)† = (-1)^m q(-m).
class QuadrupoleTensor {
 public:
  explicit QuadrupoleTensor(std::array<ComplexMatrix, 5> components);

  /// Component for m in [-2, 2]; throws OutOfRange otherwise.
  const ComplexMatrix& q(int m) const;
  std::size_t dim() const { return components_[0].dim(); }

 private:
  std::array<ComplexMatrix, 5> components_;  // m = -2 .. +2
};

QuadrupoleTensor build_quadrupole_tensor(const SpinSystem& s);

}  // namespace quadspin
