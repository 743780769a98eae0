#pragma once

#include <vector>

#include "opradius/matrix.hpp"

namespace opradius {

/// Eigendecomposition of a Hermitian matrix: eigenvalues ascending, the
/// columns of `eigenvectors` are the matching orthonormal eigenvectors, so
/// V diag(lambda) V* reconstructs the input.
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Cyclic complex Jacobi diagonalization of the symmetrized input (h+h*)/2.
/// Rotations stop once the off-diagonal Frobenius mass drops below
/// 1e-13*(1+scale), hard cap 100 sweeps. Throws std::invalid_argument when
/// the input is not Hermitian within 1e-10 entrywise.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

/// Eigenvalues only (ascending), same algorithm without accumulating vectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Largest / smallest eigenvalue of a Hermitian matrix. dim <= 2 is closed
/// form; larger inputs run the values-only Jacobi path.
double largest_eigenvalue(const ComplexMatrix& h);
double smallest_eigenvalue(const ComplexMatrix& h);

/// Largest singular value, computed as sqrt(lambda_max(m* m)).
double operator_norm(const ComplexMatrix& m);

/// In-place values-only paths for sweep hot loops. The input must already be
/// exactly Hermitian; its contents are destroyed.
double largest_eigenvalue_in_place(ComplexMatrix& h);
void eigenvalue_range_in_place(ComplexMatrix& h, double& smallest, double& largest);

/// PSD square root of a Hermitian matrix. Eigenvalues in
/// [-1e-10*(1+||h||), 0) are clamped to zero; anything below that threshold
/// throws std::domain_error (materially indefinite input).
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

/// |m| = (m* m)^(1/2).
ComplexMatrix matrix_abs(const ComplexMatrix& m);

} // namespace opradius
