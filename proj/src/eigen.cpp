#include "opradius/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace opradius {

namespace {

constexpr int kMaxSweeps = 100;

void require_hermitian(const ComplexMatrix& h) {
    const int n = h.dim();
    const double tol = 1e-10 * (1.0 + max_abs_entry(h));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (std::abs(h(i, j) - std::conj(h(j, i))) > tol)
                throw std::invalid_argument("hermitian_eigen: input is not Hermitian within tolerance");
}

ComplexMatrix symmetrize(const ComplexMatrix& h) {
    const int n = h.dim();
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
        a(i, i) = Complex(a(i, i).real(), 0.0);
    }
    return a;
}

double offdiag_mass(const ComplexMatrix& a) {
    const int n = a.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi pass over all (p,q), p<q. Rotations are unitary plane
// rotations with the pivot phase folded in, so the working matrix stays
// Hermitian and V stays unitary by construction.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix* v, double skip_below) {
    const int n = a.dim();
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const Complex apq = a(p, q);
            const double r = std::abs(apq);
            if (r <= skip_below) continue;
            const Complex phase = apq / r; // e^{i beta}
            const double theta = (a(p, p).real() - a(q, q).real()) / (2.0 * r);
            const double t = (theta == 0.0)
                                 ? 1.0
                                 : std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const Complex sp = s * phase;        // s e^{i beta}
            const Complex spc = std::conj(sp);   // s e^{-i beta}

            for (int k = 0; k < n; ++k) { // columns: A <- A G
                const Complex akp = a(k, p), akq = a(k, q);
                a(k, p) = c * akp + spc * akq;
                a(k, q) = -sp * akp + c * akq;
            }
            for (int k = 0; k < n; ++k) { // rows: A <- G* A
                const Complex apk = a(p, k), aqk = a(q, k);
                a(p, k) = c * apk + sp * aqk;
                a(q, k) = -spc * apk + c * aqk;
            }
            a(p, q) = Complex(0.0, 0.0);
            a(q, p) = Complex(0.0, 0.0);
            a(p, p) = Complex(a(p, p).real(), 0.0);
            a(q, q) = Complex(a(q, q).real(), 0.0);

            if (v) {
                for (int k = 0; k < n; ++k) { // V <- V G
                    const Complex vkp = (*v)(k, p), vkq = (*v)(k, q);
                    (*v)(k, p) = c * vkp + spc * vkq;
                    (*v)(k, q) = -sp * vkp + c * vkq;
                }
            }
        }
    }
}

// Runs sweeps until the off-diagonal mass is below threshold.
void jacobi_converge(ComplexMatrix& a, ComplexMatrix* v) {
    const int n = a.dim();
    const double scale = frobenius_norm(a);
    const double target = 1e-13 * (1.0 + scale);
    const double skip_below = target / (n * n + 1.0);
    for (int sweep = 0; sweep < kMaxSweeps && offdiag_mass(a) >= target; ++sweep)
        jacobi_sweep(a, v, skip_below);
}

// Diagonalizes the symmetrized input in place; returns unsorted diagonal.
std::vector<double> jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix* v) {
    const int n = a.dim();
    jacobi_converge(a, v);
    std::vector<double> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = a(i, i).real();
    return d;
}

std::vector<size_t> ascending_order(const std::vector<double>& d) {
    std::vector<size_t> idx(d.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&d](size_t i, size_t j) { return d[i] < d[j]; });
    return idx;
}

} // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
    require_hermitian(h);
    ComplexMatrix a = symmetrize(h);
    ComplexMatrix v = identity(h.dim());
    std::vector<double> d = jacobi_diagonalize(a, &v);

    const auto order = ascending_order(d);
    const int n = h.dim();
    HermitianEigen out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors = ComplexMatrix(n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[static_cast<size_t>(j)] = d[order[static_cast<size_t>(j)]];
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, static_cast<int>(order[static_cast<size_t>(j)]));
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    require_hermitian(h);
    const int n = h.dim();
    if (n == 1) return {h(0, 0).real()};
    if (n == 2) {
        const double a = h(0, 0).real(), b = h(1, 1).real();
        const double m = 0.5 * (a + b);
        const double r = std::hypot(0.5 * (a - b), std::abs(0.5 * (h(0, 1) + std::conj(h(1, 0)))));
        return {m - r, m + r};
    }
    ComplexMatrix a = symmetrize(h);
    std::vector<double> d = jacobi_diagonalize(a, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

double largest_eigenvalue(const ComplexMatrix& h) { return hermitian_eigenvalues(h).back(); }
double smallest_eigenvalue(const ComplexMatrix& h) { return hermitian_eigenvalues(h).front(); }

double largest_eigenvalue_in_place(ComplexMatrix& h) {
    const int n = h.dim();
    if (n == 1) return h(0, 0).real();
    if (n == 2) {
        const double a = h(0, 0).real(), b = h(1, 1).real();
        return 0.5 * (a + b) + std::hypot(0.5 * (a - b), std::abs(h(0, 1)));
    }
    jacobi_converge(h, nullptr);
    double best = h(0, 0).real();
    for (int i = 1; i < n; ++i) best = std::max(best, h(i, i).real());
    return best;
}

void eigenvalue_range_in_place(ComplexMatrix& h, double& smallest, double& largest) {
    const int n = h.dim();
    if (n == 1) {
        smallest = largest = h(0, 0).real();
        return;
    }
    if (n == 2) {
        const double a = h(0, 0).real(), b = h(1, 1).real();
        const double mid = 0.5 * (a + b), rad = std::hypot(0.5 * (a - b), std::abs(h(0, 1)));
        smallest = mid - rad;
        largest = mid + rad;
        return;
    }
    jacobi_converge(h, nullptr);
    smallest = largest = h(0, 0).real();
    for (int i = 1; i < n; ++i) {
        smallest = std::min(smallest, h(i, i).real());
        largest = std::max(largest, h(i, i).real());
    }
}

double operator_norm(const ComplexMatrix& m) {
    const ComplexMatrix mm = multiply(adjoint(m), m);
    return std::sqrt(std::max(0.0, largest_eigenvalue(mm)));
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    HermitianEigen eig = hermitian_eigen(h);
    const int n = h.dim();
    double lam_max = 0.0;
    for (double lam : eig.eigenvalues) lam_max = std::max(lam_max, std::abs(lam));
    const double clamp = 1e-10 * (1.0 + lam_max);
    std::vector<double> roots(eig.eigenvalues.size());
    for (size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam < -clamp) throw std::domain_error("psd_sqrt: input is not positive semidefinite");
        roots[k] = std::sqrt(std::max(0.0, lam));
    }
    const ComplexMatrix& v = eig.eigenvectors;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < n; ++k) s += roots[static_cast<size_t>(k)] * v(i, k) * std::conj(v(j, k));
            r(i, j) = (i == j) ? Complex(s.real(), 0.0) : s;
            if (i != j) r(j, i) = std::conj(s);
        }
    return r;
}

ComplexMatrix matrix_abs(const ComplexMatrix& m) { return psd_sqrt(multiply(adjoint(m), m)); }

} // namespace opradius
