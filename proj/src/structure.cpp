#include "opradius/structure.hpp"

#include "opradius/eigen.hpp"

namespace opradius {

StructureFlags classify(const ComplexMatrix& m) {
    const double tol = 1e-10 * (1.0 + operator_norm(m));
    StructureFlags f;
    f.is_hermitian = operator_norm(m - adjoint(m)) <= tol;
    const ComplexMatrix ms = adjoint(m);
    f.is_normal = operator_norm(multiply(ms, m) - multiply(m, ms)) <= tol;
    f.is_square_zero = operator_norm(multiply(m, m)) <= tol;
    const auto [re, im] = cartesian_parts(m);
    f.is_accretive_dissipative = smallest_eigenvalue(re) >= -tol && smallest_eigenvalue(im) >= -tol;
    return f;
}

} // namespace opradius
