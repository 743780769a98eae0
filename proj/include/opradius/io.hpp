#pragma once

#include <string>
#include <vector>

#include "opradius/matrix.hpp"

namespace opradius {

/// Matrix document: {"dim": n, "data": [[[re,im], ...], ...]}, data row-major,
/// n rows of n entries. Parse errors carry distinct diagnostics for a missing
/// file, malformed JSON, dimension mismatch, and non-finite entries.
ComplexMatrix parse_matrix_json(const std::string& text);
ComplexMatrix parse_matrix_file(const std::string& path);
std::string matrix_to_json(const ComplexMatrix& m);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

/// Vector document: {"vectors": [[[re,im], ...], ...]}.
std::vector<ComplexVector> parse_vectors_json(const std::string& text);
std::vector<ComplexVector> parse_vectors_file(const std::string& path);

} // namespace opradius
