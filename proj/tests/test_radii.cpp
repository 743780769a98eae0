#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "opradius/eigen.hpp"
#include "opradius/radii.hpp"
#include "opradius/rng.hpp"

using namespace opradius;

namespace {

const double kSqrt2 = std::sqrt(2.0);

ComplexMatrix random_matrix(Rng& rng, int n, double scale = 1.0) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.complex_box(scale);
    return m;
}

SweepConfig quick() {
    SweepConfig cfg;
    cfg.coarse_points = 180;
    return cfg;
}

} // namespace

TEST_CASE("support_function") {
    Rng rng(21);
    const ComplexMatrix g = random_matrix(rng, 3);
    const ComplexMatrix h = 0.5 * (g + adjoint(g));
    CHECK(support_function(h, 0.0) == doctest::Approx(largest_eigenvalue(h)).epsilon(1e-12));

    const ComplexMatrix n{{0, 3}, {0, 0}};
    for (double th = 0.0; th < 6.2; th += 0.7)
        CHECK(support_function(n, th) == doctest::Approx(1.5).epsilon(1e-12));

    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix t = random_matrix(rng, 2 + trial % 3, 2.0);
        const double nm = operator_norm(t);
        for (double th = 0.0; th < 6.2; th += 1.1)
            CHECK(std::abs(support_function(t, th)) <= nm + 1e-10);
    }
}

TEST_CASE("numerical_radius on printed matrices") {
    const auto r1 = numerical_radius(ComplexMatrix{{1, 0}, {4, 1}});
    CHECK(r1.value == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(r1.method == Method::theta_sweep);
    // witness reproduces the value
    CHECK(support_function(ComplexMatrix{{1, 0}, {4, 1}}, r1.theta) ==
          doctest::Approx(r1.value).epsilon(1e-12));

    CHECK(numerical_radius(ComplexMatrix{{0, 3}, {0, 0}}).value == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(numerical_radius(identity(3)).value == doctest::Approx(1.0).epsilon(1e-10));

    Rng rng(22);
    const ComplexMatrix g = random_matrix(rng, 3);
    const ComplexMatrix h = 0.5 * (g + adjoint(g));
    CHECK(numerical_radius(h).value == doctest::Approx(operator_norm(h)).epsilon(1e-9));
}

TEST_CASE("numerical_radius invariants") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 2 + trial % 3;
        const ComplexMatrix t = random_matrix(rng, d, 2.0);
        const double w = numerical_radius(t, quick()).value;
        const double nm = operator_norm(t);
        CHECK(w >= 0.5 * nm - 1e-8 * (1 + nm));
        CHECK(w <= nm + 1e-8 * (1 + nm));

        const Complex c = rng.complex_box(2.0);
        const double wc = numerical_radius(c * t, quick()).value;
        CHECK(wc == doctest::Approx(std::abs(c) * w).epsilon(1e-9));

        CHECK(numerical_radius(adjoint(t), quick()).value == doctest::Approx(w).epsilon(1e-9));
    }
}

TEST_CASE("numerical_radius of normal matrices equals the norm") {
    Rng rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + trial % 3;
        ComplexMatrix diag(d);
        for (int i = 0; i < d; ++i) diag(i, i) = rng.complex_box(3.0);
        CHECK(numerical_radius(diag).value == doctest::Approx(operator_norm(diag)).epsilon(1e-8));
    }
}

TEST_CASE("block_numerical_radius") {
    CHECK(block_numerical_radius(identity(2), identity(2)).value == doctest::Approx(1.0).epsilon(1e-10));

    Rng rng(25);
    const ComplexMatrix a = random_matrix(rng, 2, 2.0);
    CHECK(block_numerical_radius(a, zero(2)).value ==
          doctest::Approx(0.5 * operator_norm(a)).epsilon(1e-10));

    // printed value: omega^2 of the block for this pair
    const ComplexMatrix pa{{5, 0}, {2, 5}};
    const ComplexMatrix pb{{1, 0}, {1, 3}};
    const double w = block_numerical_radius(pa, pb).value;
    CHECK(w * w == doctest::Approx(20.078).epsilon(1e-3));

    // the two computation routes agree
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + trial % 2;
        const ComplexMatrix x = random_matrix(rng, d, 2.0);
        const ComplexMatrix y = random_matrix(rng, d, 2.0);
        const double direct = numerical_radius(block_antidiag(x, y), quick()).value;
        const double via_sup = block_numerical_radius(x, y, quick()).value;
        CHECK(direct == doctest::Approx(via_sup).epsilon(1e-8));
    }

    CHECK_THROWS_AS(block_numerical_radius(identity(2), identity(3)), std::invalid_argument);
}

TEST_CASE("sup_rotated_real_norm equals the numerical radius") {
    Rng rng(26);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix t = random_matrix(rng, 2 + trial % 3, 2.0);
        CHECK(sup_rotated_real_norm(t, quick()).value ==
              doctest::Approx(numerical_radius(t, quick()).value).epsilon(1e-9));
    }
}

TEST_CASE("euclidean_radius special tuples") {
    Rng rng(27);
    const ComplexMatrix a = random_matrix(rng, 2, 2.0);
    const double wa = numerical_radius(a).value;

    CHECK(euclidean_radius({a, a}).value == doctest::Approx(kSqrt2 * wa).epsilon(1e-8));
    CHECK(euclidean_radius({a, adjoint(a)}).value == doctest::Approx(kSqrt2 * wa).epsilon(1e-8));
    CHECK(euclidean_radius({a, zero(2)}).value == doctest::Approx(wa).epsilon(1e-8));
    CHECK(euclidean_radius({a}).value == doctest::Approx(wa).epsilon(1e-8));

    // same identities along the multistart path
    for (int d = 3; d <= 4; ++d) {
        const ComplexMatrix t = random_matrix(rng, d, 2.0);
        const double wt = numerical_radius(t).value;
        const auto r = euclidean_radius({t, adjoint(t)});
        CHECK(r.method == Method::sphere_multistart);
        CHECK(r.value == doctest::Approx(kSqrt2 * wt).epsilon(1e-7));
        CHECK(vec_norm(r.witness) == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(euclidean_radius({}), std::invalid_argument);
    CHECK_THROWS_AS(euclidean_radius({identity(2), identity(3)}), std::invalid_argument);
}

TEST_CASE("euclidean_radius matches the grid oracle") {
    Rng rng(28);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = random_matrix(rng, 2, 2.0);
        const ComplexMatrix b = random_matrix(rng, 2, 2.0);
        const double opt = euclidean_radius({a, b}, quick()).value;
        const double grid = omega_e_grid_oracle({a, b}, 400);
        CHECK(std::abs(opt - grid) < 1e-4 * (1.0 + opt));
        CHECK(opt >= grid - 1e-9); // optimizer never falls below the coarse grid
    }
}

TEST_CASE("euclidean_norm") {
    Rng rng(29);
    const ComplexMatrix a = random_matrix(rng, 2, 2.0);
    CHECK(euclidean_norm({a, zero(2)}).value == doctest::Approx(operator_norm(a)).epsilon(1e-9));
    CHECK(euclidean_norm({identity(2), identity(2)}).value == doctest::Approx(kSqrt2).epsilon(1e-9));
    CHECK(euclidean_norm({a}).value == doctest::Approx(operator_norm(a)).epsilon(1e-12));

    // normal T: ||(Re T, Im T)||_e = ||T||
    ComplexMatrix diag(3);
    for (int i = 0; i < 3; ++i) diag(i, i) = rng.complex_box(2.0);
    const auto [re, im] = cartesian_parts(diag);
    CHECK(euclidean_norm({re, im}).value == doctest::Approx(operator_norm(diag)).epsilon(1e-7));

    // n = 3 goes through the coefficient-sphere multistart
    const auto r3 = euclidean_norm({identity(2), identity(2), identity(2)});
    CHECK(r3.method == Method::sphere_multistart);
    CHECK(r3.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-7));

    CHECK_THROWS_AS(euclidean_norm({}), std::invalid_argument);
}

TEST_CASE("omega_e <= norm_e") {
    Rng rng(30);
    for (int trial = 0; trial < 8; ++trial) {
        const int d = 2 + trial % 3;
        const ComplexMatrix a = random_matrix(rng, d, 2.0);
        const ComplexMatrix b = random_matrix(rng, d, 2.0);
        const auto we = euclidean_radius({a, b}, quick());
        const auto ne = euclidean_norm({a, b}, quick());
        CHECK(we.value <= ne.value + we.accuracy + ne.accuracy);
    }
}

TEST_CASE("rotating the second modulus leaves omega unchanged") {
    Rng rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        const int d = 2 + trial % 3;
        const ComplexMatrix t = random_matrix(rng, d, 2.0);
        const ComplexMatrix p = multiply(adjoint(t), t);
        const ComplexMatrix q = multiply(t, adjoint(t));
        const double plus = numerical_radius(p + Complex(0, 1) * q, quick()).value;
        const double minus = numerical_radius(p - Complex(0, 1) * q, quick()).value;
        CHECK(plus == doctest::Approx(minus).epsilon(1e-9));
    }
}

TEST_CASE("euclidean_norm_xy_oracle") {
    CHECK(euclidean_norm_xy_oracle({identity(2), identity(2)}, 1000) ==
          doctest::Approx(kSqrt2).epsilon(1e-4));

    Rng rng(32);
    const ComplexMatrix a = random_matrix(rng, 2, 2.0);
    const double nm = operator_norm(a);
    const double est = euclidean_norm_xy_oracle({a, zero(2)}, 100000);
    CHECK(est <= nm + 1e-9);
    CHECK(nm - est < 1e-4);

    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix x = random_matrix(rng, 2, 2.0);
        const ComplexMatrix y = random_matrix(rng, 2, 2.0);
        const double ne = euclidean_norm({x, y}).value;
        const double xy = euclidean_norm_xy_oracle({x, y}, 20000);
        CHECK(std::abs(ne - xy) < 1e-4 * (1.0 + ne));
    }
}

TEST_CASE("omega_e_grid_oracle") {
    CHECK(omega_e_grid_oracle({identity(2), zero(2)}, 100) == doctest::Approx(1.0).epsilon(1e-9));

    Rng rng(33);
    const ComplexMatrix t = random_matrix(rng, 2, 2.0);
    const double w = numerical_radius(t).value;
    CHECK(omega_e_grid_oracle({t, adjoint(t)}, 400) == doctest::Approx(kSqrt2 * w).epsilon(1e-4));

    CHECK_THROWS_AS(omega_e_grid_oracle({identity(3)}, 100), std::invalid_argument);
    CHECK_THROWS_AS(omega_e_grid_oracle({identity(2)}, 1), std::invalid_argument);
}

TEST_CASE("witnesses reproduce the reported values") {
    Rng rng(34);
    for (int trial = 0; trial < 6; ++trial) {
        const int d = 2 + trial % 3;
        const ComplexMatrix a = random_matrix(rng, d, 2.0);
        const ComplexMatrix b = random_matrix(rng, d, 2.0);

        const auto we = euclidean_radius({a, b}, quick());
        double s = std::norm(inner(mat_vec(a, we.witness), we.witness)) +
                   std::norm(inner(mat_vec(b, we.witness), we.witness));
        CHECK(std::sqrt(s) == doctest::Approx(we.value).epsilon(1e-12));
        CHECK(vec_norm(we.witness) == doctest::Approx(1.0).epsilon(1e-12));

        const auto ne = euclidean_norm({a, b}, quick());
        ComplexMatrix m = ne.witness[0] * a + ne.witness[1] * b;
        CHECK(operator_norm(m) == doctest::Approx(ne.value).epsilon(1e-12));
        CHECK(vec_norm(ne.witness) == doctest::Approx(1.0).epsilon(1e-12));

        const auto w = numerical_radius(a, quick());
        CHECK(support_function(a, w.theta) == doctest::Approx(w.value).epsilon(1e-12));
        CHECK(w.accuracy >= 0.0);
    }
}

TEST_CASE("sweep config validation") {
    SweepConfig bad;
    bad.coarse_points = 4;
    CHECK_THROWS_AS(numerical_radius(identity(2), bad), std::invalid_argument);
    bad = SweepConfig{};
    bad.refine_tol = 0.0;
    CHECK_THROWS_AS(numerical_radius(identity(2), bad), std::invalid_argument);
}
