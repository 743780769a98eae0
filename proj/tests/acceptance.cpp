// Acceptance suite: exercises every advertised guarantee end to end and
// prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "opradius/catalog.hpp"
#include "opradius/eigen.hpp"
#include "opradius/harness.hpp"
#include "opradius/radii.hpp"
#include "opradius/rng.hpp"
#include "opradius/structure.hpp"

using namespace opradius;

namespace {

constexpr uint64_t kSeed = 0xACCE5501;
int failures = 0;

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void report(int idx, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, label.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

ComplexMatrix draw(Structure structure, int dim, double scale, uint64_t seed) {
    EnsembleSpec spec;
    spec.dim = dim;
    spec.structure = structure;
    spec.scale = scale;
    return generate_matrix(spec, seed);
}

SweepConfig accurate_config() {
    SweepConfig cfg;
    cfg.coarse_points = 128;
    cfg.multistart_count = 24;
    return cfg;
}

// -- criterion 1 -------------------------------------------------------------

void criterion_paper_examples() {
    const double t0 = now_ms();
    const SuiteReport rep = run_paper_examples();
    const double secs = (now_ms() - t0) / 1000.0;
    int pass = 0;
    double max_rel = 0.0;
    std::string worst;
    for (const auto& f : rep.fixtures) {
        const double rel = std::abs(f.computed - f.expected) / std::max(1.0, std::abs(f.expected));
        if (rel > max_rel) {
            max_rel = rel;
            worst = f.fixture_id + " [" + f.quantity + "]";
        }
        pass += f.pass ? 1 : 0;
    }
    const bool ok = pass == static_cast<int>(rep.fixtures.size()) && secs < 60.0;
    report(1, "worked-example reproduction",
           ok,
           fmt("%d/%zu printed values within 1e-3, max rel gap %.2e at %s, %.1f s", pass,
               rep.fixtures.size(), max_rel, worst.c_str(), secs));
}

// -- criterion 2 -------------------------------------------------------------

void criterion_property_suite() {
    std::vector<std::string> ids;
    for (const auto& r : list_relations()) ids.push_back(r.id);
    const double t0 = now_ms();
    const SuiteReport rep = run_property_suite(ids, 1000, {2, 3, 4}, 42);
    const double secs = (now_ms() - t0) / 1000.0;
    long long violated = 0, inconclusive = 0, total = 0;
    for (const auto& [id, t] : rep.tallies) {
        violated += t.violated;
        inconclusive += t.inconclusive;
        total += t.satisfied + t.violated + t.inconclusive;
    }
    const double inc_rate = static_cast<double>(inconclusive) / static_cast<double>(total);
    const bool ok = violated == 0 && inc_rate < 0.01 && secs < 300.0;
    report(2, "property suite, 37 relations x 1000 trials, dims {2,3,4}",
           ok,
           fmt("violated %lld, inconclusive %lld (%.3f%%), %.1f s", violated, inconclusive,
               100.0 * inc_rate, secs));
    for (const auto& c : rep.counterexamples)
        std::printf("       counterexample %s trial %d dim %d seed %llu slack %.3e\n",
                    c.relation_id.c_str(), c.trial, c.dim,
                    static_cast<unsigned long long>(c.seed), c.slack);
}

// -- criterion 3 -------------------------------------------------------------

void criterion_equality_identities() {
    const SweepConfig cfg = accurate_config();
    struct Case {
        const char* name;
        double worst = 0.0;
    };
    Case cases[5] = {{"R31"}, {"R32"}, {"R35"}, {"R36"}, {"R37"}};

    for (int k = 0; k < 500; ++k) {
        const int dim = 2 + k % 3;
        const ComplexMatrix t = draw(Structure::general_complex, dim, 2.0,
                                     derive_seed(kSeed, "ident", static_cast<uint64_t>(k)));
        const ComplexMatrix b = draw(Structure::general_complex, dim, 2.0,
                                     derive_seed(kSeed, "ident2", static_cast<uint64_t>(k)));

        const double hirz = std::abs(numerical_radius(block_antidiag(t, b), cfg).value -
                                     block_numerical_radius(t, b, cfg).value);
        cases[0].worst = std::max(cases[0].worst, hirz);

        const double wt = numerical_radius(t, cfg).value;
        cases[1].worst =
            std::max(cases[1].worst, std::abs(wt - sup_rotated_real_norm(t, cfg).value));

        const auto [re, im] = cartesian_parts(t);
        cases[2].worst =
            std::max(cases[2].worst, std::abs(wt - euclidean_radius({re, im}, cfg).value));

        cases[3].worst = std::max(
            cases[3].worst,
            std::abs(euclidean_radius({t, adjoint(t)}, cfg).value - std::sqrt(2.0) * wt));

        const ComplexMatrix g = multiply(adjoint(t), t), cg = multiply(t, adjoint(t));
        cases[4].worst = std::max(
            cases[4].worst, std::abs(numerical_radius(g + Complex(0, 1) * cg, cfg).value -
                                     numerical_radius(g + Complex(0, -1) * cg, cfg).value));
    }

    for (const auto& c : cases)
        report(3, fmt("equality identity %s on 500 random matrices", c.name), c.worst <= 1e-6,
               fmt("max |difference| %.2e (tolerance 1e-6)", c.worst));
}

// -- criterion 4 -------------------------------------------------------------

void criterion_special_classes() {
    const SweepConfig cfg = accurate_config();

    double worst24 = 0.0;
    for (int k = 0; k < 200; ++k) {
        const ComplexMatrix t = draw(Structure::accretive_dissipative, 2 + k % 3, 1.5,
                                     derive_seed(kSeed, "accdis", static_cast<uint64_t>(k)));
        const auto [re, im] = cartesian_parts(t);
        worst24 = std::max(worst24, std::abs(euclidean_norm({re, im}, cfg).value -
                                             numerical_radius(t, cfg).value));
    }
    report(4, "accretive-dissipative equality ne(ReT,ImT) = w(T), 200 matrices", worst24 <= 1e-6,
           fmt("max |difference| %.2e (tolerance 1e-6)", worst24));

    // the normal-operator statement is a triple equality; check both members
    // against ||T||
    double worst25 = 0.0;
    for (int k = 0; k < 200; ++k) {
        const ComplexMatrix t = draw(Structure::normal, 2 + k % 3, 2.0,
                                     derive_seed(kSeed, "normal", static_cast<uint64_t>(k)));
        const auto [re, im] = cartesian_parts(t);
        const double nt = operator_norm(t);
        const double ne_v = euclidean_norm({re, im}, cfg).value;
        const double wmid =
            numerical_radius(matrix_abs(re) + Complex(0, 1) * matrix_abs(im), cfg).value;
        worst25 = std::max({worst25, std::abs(ne_v - nt), std::abs(wmid - nt)});
    }
    report(4, "normal equalities ne(ReT,ImT) = w(|ReT|+i|ImT|) = ||T||, 200 matrices",
           worst25 <= 1e-6, fmt("max |difference| %.2e (tolerance 1e-6)", worst25));

    double worst05 = 0.0;
    for (int k = 0; k < 200; ++k) {
        const ComplexMatrix x = draw(Structure::square_zero, 2 + k % 3, 2.5,
                                     derive_seed(kSeed, "sqzero", static_cast<uint64_t>(k)));
        worst05 = std::max(worst05,
                           std::abs(numerical_radius(x, cfg).value - 0.5 * operator_norm(x)));
    }
    report(4, "square-zero equality w(X) = ||X||/2, 200 matrices", worst05 <= 1e-8,
           fmt("max |difference| %.2e (tolerance 1e-8)", worst05));
}

// -- criterion 5 -------------------------------------------------------------

void criterion_oracle_agreement() {
    double worst_grid = 0.0;
    for (int k = 0; k < 100; ++k) {
        const ComplexMatrix a = draw(Structure::general_complex, 2, 2.0,
                                     derive_seed(kSeed, "grid_a", static_cast<uint64_t>(k)));
        const ComplexMatrix b = draw(Structure::general_complex, 2, 2.0,
                                     derive_seed(kSeed, "grid_b", static_cast<uint64_t>(k)));
        const double opt = euclidean_radius({a, b}).value;
        const double oracle = omega_e_grid_oracle({a, b}, 400);
        worst_grid = std::max(worst_grid, std::abs(opt - oracle) / (1.0 + opt));
    }
    report(5, "euclidean_radius vs grid oracle (grid 400), 100 pairs", worst_grid < 1e-4,
           fmt("max normalized discrepancy %.2e (tolerance 1e-4)", worst_grid));

    double worst_xy = 0.0;
    for (int k = 0; k < 100; ++k) {
        const ComplexMatrix a = draw(Structure::general_complex, 2, 2.0,
                                     derive_seed(kSeed, "xy_a", static_cast<uint64_t>(k)));
        const ComplexMatrix b = draw(Structure::general_complex, 2, 2.0,
                                     derive_seed(kSeed, "xy_b", static_cast<uint64_t>(k)));
        const double ne_v = euclidean_norm({a, b}).value;
        const double oracle = euclidean_norm_xy_oracle({a, b}, 20000);
        worst_xy = std::max(worst_xy, std::abs(ne_v - oracle) / (1.0 + ne_v));
    }
    report(5, "euclidean_norm vs (x,y)-sampling oracle, 100 pairs", worst_xy < 1e-4,
           fmt("max normalized discrepancy %.2e (tolerance 1e-4)", worst_xy));

    double worst_lo = -1e30, worst_hi = -1e30;
    for (int k = 0; k < 50; ++k) {
        const ComplexMatrix t = draw(Structure::general_complex, 2, 1.0,
                                     derive_seed(kSeed, "wgrid", static_cast<uint64_t>(k)));
        // direct 10^6-point scan of |<Tx,x>| over the unit sphere of C^2
        const int nt = 500, np = 2000;
        double grid = 0.0;
        for (int i = 0; i < nt; ++i) {
            const double th = 1.5707963267948966 * i / (nt - 1);
            const double c = std::cos(th), s = std::sin(th);
            const Complex t00 = t(0, 0), t01 = t(0, 1), t10 = t(1, 0), t11 = t(1, 1);
            for (int j = 0; j < np; ++j) {
                const Complex e = std::polar(1.0, 6.283185307179586 * j / np);
                const Complex q =
                    c * c * t00 + s * s * t11 + c * s * (t01 * e + t10 * std::conj(e));
                grid = std::max(grid, std::abs(q));
            }
        }
        const double sweep = numerical_radius(t).value;
        worst_lo = std::max(worst_lo, grid - sweep); // sweep must not undershoot the grid
        worst_hi = std::max(worst_hi, sweep - grid); // nor overshoot it materially
    }
    const bool ok = worst_lo <= 1e-6 && worst_hi <= 1e-4;
    report(5, "numerical_radius vs 10^6-point sphere grid, 50 matrices", ok,
           fmt("max undershoot %.2e (<=1e-6), max overshoot %.2e (<=1e-4)", worst_lo, worst_hi));
}

// -- criterion 6 -------------------------------------------------------------

void criterion_vector_inequalities() {
    Rng rng(derive_seed(kSeed, "vectors", 0));
    auto rand_vec = [&rng](int n) {
        ComplexVector v(static_cast<size_t>(n));
        for (auto& z : v) z = rng.complex_box(2.0);
        return v;
    };
    auto unit_vec = [&](int n) {
        ComplexVector v = rand_vec(n);
        const double nn = vec_norm(v);
        for (auto& z : v) z /= nn;
        return v;
    };
    auto rand_mat = [&rng](int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = rng.complex_box(2.0);
        return m;
    };

    long long bad = 0;
    for (int k = 0; k < 10000; ++k) {
        const int d = 2 + k % 7;
        if (check_generalized_cauchy_schwarz(rand_vec(d), rand_vec(d), rand_vec(d)).status !=
            CheckStatus::Satisfied)
            ++bad;
        if (check_eq4(rand_vec(d), rand_vec(d), unit_vec(d)).status != CheckStatus::Satisfied) ++bad;
        if (check_angle_inequality(rand_vec(d), rand_vec(d), rand_vec(d)).status !=
            CheckStatus::Satisfied)
            ++bad;
        if (check_mixed_schwarz(rand_mat(d), rand_vec(d), rand_vec(d)).status !=
            CheckStatus::Satisfied)
            ++bad;
    }
    report(6, "vector inequalities, 4 x 10^4 random inputs at tol 1e-12", bad == 0,
           fmt("%lld not-satisfied outcomes", bad));

    // trivial equality cases, exact to 1e-12
    const ComplexVector e = unit_vec(3);
    const auto gcs = check_generalized_cauchy_schwarz(e, e, e);
    const auto eq4 = check_eq4(e, e, e);
    const auto ang = check_angle_inequality(e, e, e);
    const auto msl = check_mixed_schwarz(identity(3), e, e);
    const bool eq_ok =
        std::abs(gcs.term_values[0].second - 2.0) <= 1e-12 &&
        std::abs(gcs.term_values[2].second - 2.0) <= 1e-12 &&
        std::abs(eq4.term_values[0].second - 2.0) <= 1e-12 &&
        std::abs(eq4.term_values[2].second - 2.0) <= 1e-12 &&
        std::abs(ang.term_values[0].second - 1.0) <= 1e-12 &&
        std::abs(ang.term_values[1].second - 1.0) <= 1e-12 &&
        std::abs(msl.term_values[0].second - msl.term_values[1].second) <= 1e-12;
    report(6, "vector inequality equality cases", eq_ok, "all pinned equalities within 1e-12");
}

// -- criterion 7 -------------------------------------------------------------

void criterion_sharpness() {
    const SweepConfig cfg = accurate_config();
    double worst14 = 0.0, worst18 = 0.0, worst20 = 0.0, worst15 = 0.0;
    for (int k = 0; k < 100; ++k) {
        const ComplexMatrix t = draw(Structure::normal, 2 + k % 3, 2.0,
                                     derive_seed(kSeed, "sharp", static_cast<uint64_t>(k)));
        for (const char* id : {"R14", "R18", "R20"}) {
            const auto rep = evaluate_relation(id, {t}, -1.0, cfg);
            const double gap =
                std::abs(rep.term_values[0].second - rep.term_values[1].second);
            if (std::string(id) == "R14") worst14 = std::max(worst14, gap);
            if (std::string(id) == "R18") worst18 = std::max(worst18, gap);
            if (std::string(id) == "R20") worst20 = std::max(worst20, gap);
        }

        const auto rep15 = evaluate_relation("R15", {t, adjoint(t)}, -1.0, cfg);
        worst15 = std::max(worst15,
                           std::abs(rep15.term_values[0].second - rep15.term_values[1].second));
    }
    report(7, "sharpness: normal T in R14/R18/R20", worst14 <= 1e-6 && worst18 <= 1e-6 && worst20 <= 1e-6,
           fmt("max gaps %.2e / %.2e / %.2e (tolerance 1e-6)", worst14, worst18, worst20));
    report(7, "sharpness: B* = A normal in R15", worst15 <= 1e-6,
           fmt("max gap %.2e (tolerance 1e-6)", worst15));
}

} // namespace

int main() {
    const double t0 = now_ms();
    criterion_paper_examples();
    criterion_property_suite();
    criterion_equality_identities();
    criterion_special_classes();
    criterion_oracle_agreement();
    criterion_vector_inequalities();
    criterion_sharpness();
    std::printf("%s: %d failing criterion line(s), total %.1f s\n", failures == 0 ? "OK" : "FAILED",
                failures, (now_ms() - t0) / 1000.0);
    return failures == 0 ? 0 : 1;
}
