#include "opradius/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace opradius {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0)) {
    if (dim < 1) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries) : dim_(dim), e_(std::move(entries)) {
    if (dim < 1) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
    if (e_.size() != static_cast<size_t>(dim) * dim)
        throw std::invalid_argument("ComplexMatrix: entry count does not match dim^2");
    check_finite();
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    dim_ = static_cast<int>(rows.size());
    if (dim_ < 1) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
    e_.reserve(static_cast<size_t>(dim_) * dim_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_)
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        for (const auto& v : row) e_.push_back(v);
    }
    check_finite();
}

void ComplexMatrix::check_finite() const {
    for (const auto& v : e_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix add: dimension mismatch");
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix sub: dimension mismatch");
    for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& v : e_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    if (n != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix block_antidiag(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    if (n != b.dim()) throw std::invalid_argument("block_antidiag: dimension mismatch");
    ComplexMatrix r(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r(i, n + j) = a(i, j);
            r(n + i, j) = std::conj(b(j, i));
        }
    return r;
}

std::pair<ComplexMatrix, ComplexMatrix> cartesian_parts(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix re(n), im(n);
    const Complex half_over_i(0.0, -0.5); // 1/(2i)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Complex a = m(i, j);
            const Complex c = std::conj(m(j, i));
            re(i, j) = 0.5 * (a + c);
            im(i, j) = half_over_i * (a - c);
        }
    return {std::move(re), std::move(im)};
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& v : m.entries()) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& v : m.entries()) s = std::max(s, std::abs(v));
    return s;
}

std::string content_digest(const std::vector<ComplexMatrix>& ms) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const void* p, size_t n) {
        const auto* b = static_cast<const unsigned char*>(p);
        for (size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 1099511628211ULL;
        }
    };
    for (const auto& m : ms) {
        const int d = m.dim();
        mix(&d, sizeof d);
        for (const auto& v : m.entries()) {
            const double re = v.real(), im = v.imag();
            mix(&re, sizeof re);
            mix(&im, sizeof im);
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

Complex inner(const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: length mismatch");
    Complex s(0.0, 0.0);
    for (size_t i = 0; i < x.size(); ++i) s += std::conj(y[i]) * x[i];
    return s;
}

double vec_norm(const ComplexVector& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

ComplexVector mat_vec(const ComplexMatrix& m, const ComplexVector& x) {
    const int n = m.dim();
    if (x.size() != static_cast<size_t>(n)) throw std::invalid_argument("apply: length mismatch");
    ComplexVector r(static_cast<size_t>(n), Complex(0.0, 0.0));
    for (int i = 0; i < n; ++i) {
        Complex s(0.0, 0.0);
        for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
        r[static_cast<size_t>(i)] = s;
    }
    return r;
}

} // namespace opradius
