#pragma once

#include <vector>

#include "quadspin/complex_matrix.hpp"

namespace quadspin {

/// Result of diagonalizing a Hermitian matrix: m = U diag(eigenvalues) U†.
struct HermitianEigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary; column k pairs with eigenvalues[k]
};

/// Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws NotHermitian if the input deviates from Hermiticity by more than
/// 1e-12 (max-abs), NoConvergence if 100 full sweeps do not suffice.
HermitianEigenDecomposition eig_hermitian(const ComplexMatrix& m);

/// U diag(exp(scale * eigenvalue)) U† of a Hermitian matrix.
ComplexMatrix mat_exp_hermitian(const ComplexMatrix& m, double scale);

/// Hermitian PSD square root. Eigenvalues below -1e-9 raise NotPsd;
/// roundoff-negative eigenvalues above that are clamped to zero.
ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m);

/// Eigenvalues of a*b for Hermitian PSD a, b, returned descending and
/// clamped non-negative. Computed as the eigenvalues of sqrt(a)*b*sqrt(a),
/// which is Hermitian PSD and similar to a*b.
std::vector<double> product_eigenvalues_psd(const ComplexMatrix& a,
                                            const ComplexMatrix& b);

}  // namespace quadspin
