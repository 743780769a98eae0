#pragma once

#include "opradius/matrix.hpp"

namespace opradius {

/// Structural predicates, each decided with tolerance 1e-10*(1+||m||):
/// normal <=> ||m*m - mm*|| below tolerance, square-zero <=> ||m^2|| below
/// tolerance, accretive-dissipative <=> both Cartesian parts have smallest
/// eigenvalue >= -tolerance.
struct StructureFlags {
    bool is_hermitian = false;
    bool is_normal = false;
    bool is_square_zero = false;
    bool is_accretive_dissipative = false;
};

StructureFlags classify(const ComplexMatrix& m);

} // namespace opradius
