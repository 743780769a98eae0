#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace opradius {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square complex matrix, row-major, immutable in spirit: every
/// operation returns a fresh value. All entries are required to be finite;
/// constructors throw std::invalid_argument otherwise.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<Complex> entries);

    /// Builds from nested init lists, e.g. {{1,2},{3,4}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    int dim() const { return dim_; }

    const Complex& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }
    Complex& operator()(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }

    const std::vector<Complex>& entries() const { return e_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    /// Throws if any entry is non-finite.
    void check_finite() const;

private:
    int dim_ = 0;
    std::vector<Complex> e_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

ComplexMatrix identity(int dim);
ComplexMatrix zero(int dim);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Matrix product; throws on dimension mismatch.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// 2n x 2n matrix with `a` in the top-right block, adjoint(b) in the
/// bottom-left block and zeros elsewhere. Throws on dimension mismatch.
ComplexMatrix block_antidiag(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian pair (H, K) with m = H + iK, H = (m+m*)/2, K = (m-m*)/(2i).
std::pair<ComplexMatrix, ComplexMatrix> cartesian_parts(const ComplexMatrix& m);

double frobenius_norm(const ComplexMatrix& m);
double max_abs_entry(const ComplexMatrix& m);

/// FNV-1a hash of dim and entry bit patterns, as a fixed-width hex string.
std::string content_digest(const std::vector<ComplexMatrix>& ms);

// -- vector helpers ---------------------------------------------------------

/// <x,y> = y* x (linear in the first argument).
Complex inner(const ComplexVector& x, const ComplexVector& y);
double vec_norm(const ComplexVector& x);
/// m * x
ComplexVector mat_vec(const ComplexMatrix& m, const ComplexVector& x);

} // namespace opradius
