#include "opradius/radii.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "opradius/eigen.hpp"
#include "opradius/rng.hpp"

namespace opradius {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kHalfPi = 1.5707963267948966192313216916398;

// Fixed base seeds for the internal randomized searches; results must be a
// pure function of the inputs.
constexpr uint64_t kSphereSeed = 0x5EEDC0FFEE0A11CEULL;
constexpr uint64_t kXYOracleSeed = 0x0DDBA11CAFED00DULL;

void validate(const SweepConfig& cfg) {
    if (cfg.coarse_points < 8) throw std::invalid_argument("SweepConfig: coarse_points must be >= 8");
    if (!(cfg.refine_tol > 0.0)) throw std::invalid_argument("SweepConfig: refine_tol must be > 0");
    if (cfg.multistart_count < 1) throw std::invalid_argument("SweepConfig: multistart_count must be >= 1");
    if (cfg.max_iters < 1) throw std::invalid_argument("SweepConfig: max_iters must be >= 1");
}

void require_same_dims(const std::vector<ComplexMatrix>& ts) {
    if (ts.empty()) throw std::invalid_argument("operator tuple must be nonempty");
    for (const auto& t : ts)
        if (t.dim() != ts.front().dim())
            throw std::invalid_argument("operator tuple: dimension mismatch");
}

void rotated_real_into(const ComplexMatrix& t, double theta, ComplexMatrix& out) {
    const Complex phase = std::polar(1.0, theta);
    const int n = t.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const Complex v = 0.5 * (phase * t(i, j) + std::conj(phase * t(j, i)));
            out(i, j) = v;
            if (i != j) out(j, i) = std::conj(v);
        }
        out(i, i) = Complex(out(i, i).real(), 0.0);
    }
}

ComplexMatrix rotated_real_part(const ComplexMatrix& t, double theta) {
    ComplexMatrix r(t.dim());
    rotated_real_into(t, theta, r);
    return r;
}

// out = m* m, exactly Hermitian by construction
void gram_into(const ComplexMatrix& m, ComplexMatrix& out) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < n; ++k) s += std::conj(m(k, i)) * m(k, j);
            out(i, j) = s;
            if (i != j) out(j, i) = std::conj(s);
        }
        out(i, i) = Complex(out(i, i).real(), 0.0);
    }
}

// ||m|| with a closed form for dim <= 2; larger dims go through the
// eigensolver on m* m. The 2x2 branch works from the Gram matrix entries
// (trace/determinant cancels badly near equal singular values).
double fast_operator_norm(const ComplexMatrix& m) {
    const int n = m.dim();
    if (n == 1) return std::abs(m(0, 0));
    if (n == 2) {
        const double g11 = std::norm(m(0, 0)) + std::norm(m(1, 0));
        const double g22 = std::norm(m(0, 1)) + std::norm(m(1, 1));
        const Complex g12 = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);
        const double mid = 0.5 * (g11 + g22);
        const double rad = std::hypot(0.5 * (g11 - g22), std::abs(g12));
        return std::sqrt(std::max(0.0, mid + rad));
    }
    return operator_norm(m);
}

// Golden-section maximization on [lo, hi]; keeps the best point ever seen.
template <class F>
void golden_max(F&& f, double lo, double hi, double tol, double& best_x, double& best_f) {
    constexpr double inv_phi = 0.61803398874989484820458683436564;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    auto consider = [&](double x, double fx) {
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    };
    consider(x1, f1);
    consider(x2, f2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
            consider(x2, f2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
            consider(x1, f1);
        }
    }
}

// Coarse scan of [0, 2pi) followed by golden-section refinement of the
// +-2-step bracket around the first maximizing index and around every strict
// cyclic local maximum (near-tied lobes can hide the true supremum from a
// single-bracket refinement).
template <class F>
std::pair<double, double> sweep_circle(F&& f, const SweepConfig& cfg) {
    const int n = cfg.coarse_points;
    const double h = kTwoPi / n;
    std::vector<double> vals(static_cast<size_t>(n));
    int best_k = 0;
    for (int k = 0; k < n; ++k) {
        vals[static_cast<size_t>(k)] = f(h * k);
        if (vals[static_cast<size_t>(k)] > vals[static_cast<size_t>(best_k)]) best_k = k;
    }
    double best_x = h * best_k, best_f = vals[static_cast<size_t>(best_k)];
    golden_max(f, best_x - 2.0 * h, best_x + 2.0 * h, cfg.refine_tol, best_x, best_f);
    for (int k = 0; k < n; ++k) {
        if (k == best_k) continue;
        const double prev = vals[static_cast<size_t>((k + n - 1) % n)];
        const double next = vals[static_cast<size_t>((k + 1) % n)];
        const double cur = vals[static_cast<size_t>(k)];
        if (cur >= prev && cur >= next && (cur > prev || cur > next))
            golden_max(f, h * k - 2.0 * h, h * k + 2.0 * h, cfg.refine_tol, best_x, best_f);
    }
    return {best_x, best_f};
}

struct GridPeak {
    double t = 0.0, p = 0.0, v = 0.0;
};

// Scans the nt x np grid and returns the global argmax plus every strict
// local maximum (cyclic in phi, edge-open in t), best first, at most `cap`.
template <class F2>
std::vector<GridPeak> grid_peaks(F2&& f, int nt, int np, double ht, double hp, int cap) {
    std::vector<double> vals(static_cast<size_t>(nt) * np);
    auto at = [&](int j, int k) -> double& { return vals[static_cast<size_t>(k) * nt + j]; };
    for (int k = 0; k < np; ++k)
        for (int j = 0; j < nt; ++j) at(j, k) = f(ht * j, hp * k);

    std::vector<GridPeak> peaks;
    int bj = 0, bk = 0;
    for (int k = 0; k < np; ++k)
        for (int j = 0; j < nt; ++j) {
            const double cur = at(j, k);
            if (cur > at(bj, bk)) {
                bj = j;
                bk = k;
            }
            const double left = j > 0 ? at(j - 1, k) : -1e300;
            const double right = j + 1 < nt ? at(j + 1, k) : -1e300;
            const double down = at(j, (k + np - 1) % np);
            const double up = at(j, (k + 1) % np);
            if (cur >= left && cur >= right && cur >= down && cur >= up &&
                (cur > left || cur > right || cur > down || cur > up))
                peaks.push_back(GridPeak{ht * j, hp * k, cur});
        }
    std::sort(peaks.begin(), peaks.end(), [](const GridPeak& a, const GridPeak& b) { return a.v > b.v; });
    if (static_cast<int>(peaks.size()) > cap) peaks.resize(static_cast<size_t>(cap));
    const GridPeak global{ht * bj, hp * bk, at(bj, bk)};
    if (peaks.empty() || peaks.front().v < global.v) peaks.insert(peaks.begin(), global);
    return peaks;
}

// Coordinate-plus-diagonal pattern search on (t, phi), step halving until
// refine_tol. The diagonal moves keep it from stalling on tilted ridges.
template <class F2>
void pattern_refine_2d(F2&& f, double& t, double& p, double h0, double tol, double& best) {
    double h = h0;
    int guard = 0;
    while (h > tol && guard < 200000) {
        bool moved = false;
        const double cand_t[8] = {t + h, t - h, t, t, t + h, t + h, t - h, t - h};
        const double cand_p[8] = {p, p, p + h, p - h, p + h, p - h, p + h, p - h};
        for (int k = 0; k < 8; ++k) {
            const double fx = f(cand_t[k], cand_p[k]);
            ++guard;
            if (fx > best) {
                best = fx;
                t = cand_t[k];
                p = cand_p[k];
                moved = true;
            }
        }
        if (!moved) h *= 0.5;
    }
}

// Makes the first nonvanishing coordinate real nonnegative (removes the
// global-phase flat direction).
void canonicalize_phase(ComplexVector& x) {
    for (const auto& v : x) {
        const double a = std::abs(v);
        if (a > 1e-14) {
            const Complex ph = std::conj(v) / a;
            for (auto& w : x) w *= ph;
            return;
        }
    }
}

void normalize(ComplexVector& x) {
    const double n = vec_norm(x);
    if (n > 0.0) {
        for (auto& v : x) v /= n;
    }
}

ComplexVector sphere_point(int dim, Rng& rng) {
    ComplexVector x(static_cast<size_t>(dim));
    for (auto& v : x) v = rng.complex_normal();
    normalize(x);
    canonicalize_phase(x);
    return x;
}

// Projected gradient ascent on the unit sphere with backtracking step
// control; returns the best point reached.
template <class F, class G>
std::pair<ComplexVector, double> sphere_ascent(ComplexVector x, F&& f, G&& grad, const SweepConfig& cfg) {
    double fx = f(x);
    double step = 0.5;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        ComplexVector d = grad(x);
        // project onto the tangent space of the real sphere
        Complex xd(0.0, 0.0);
        for (size_t i = 0; i < x.size(); ++i) xd += std::conj(x[i]) * d[i];
        for (size_t i = 0; i < x.size(); ++i) d[i] -= xd.real() * x[i];
        const double dn = vec_norm(d);
        if (dn < 1e-15) break;
        for (auto& v : d) v /= dn;

        double gain = -1.0;
        while (step >= 1e-16) {
            ComplexVector trial = x;
            for (size_t i = 0; i < trial.size(); ++i) trial[i] += step * d[i];
            normalize(trial);
            canonicalize_phase(trial);
            const double ft = f(trial);
            if (ft > fx) {
                gain = ft - fx;
                x = std::move(trial);
                fx = ft;
                step = std::min(step * 1.5, 0.5);
                break;
            }
            step *= 0.5;
        }
        if (gain < 1e-12) break; // no usable step or negligible improvement
    }
    return {std::move(x), fx};
}

// sqrt(sum |<Ti x, x>|^2)
double omega_e_objective(const std::vector<ComplexMatrix>& ts, const ComplexVector& x) {
    double s = 0.0;
    for (const auto& t : ts) s += std::norm(inner(mat_vec(t, x), x));
    return std::sqrt(s);
}

// Self-consistent update for sup_x sum |<Ti x, x>|^2: with q_i = <Ti x, x>,
// replace x by the top eigenvector of sum(conj(q_i) Ti + q_i Ti*). The
// objective never decreases (Cauchy-Schwarz against the Rayleigh quotient),
// and the iteration cuts straight through the flat ridges that slow a pure
// gradient ascent near eigenvalue clusters.
ComplexVector sphere_fixed_point(const std::vector<ComplexMatrix>& ts,
                                 const std::vector<ComplexMatrix>& adjs, ComplexVector x,
                                 int max_iters) {
    const int dim = ts.front().dim();
    double g = omega_e_objective(ts, x);
    for (int iter = 0; iter < max_iters; ++iter) {
        ComplexMatrix h(dim);
        for (size_t i = 0; i < ts.size(); ++i) {
            const Complex q = inner(mat_vec(ts[i], x), x);
            const Complex qc = std::conj(q);
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) h(a, b) += qc * ts[i](a, b) + q * adjs[i](a, b);
        }
        const auto eig = hermitian_eigen(h);
        ComplexVector next(static_cast<size_t>(dim));
        for (int a = 0; a < dim; ++a) next[static_cast<size_t>(a)] = eig.eigenvectors(a, dim - 1);
        canonicalize_phase(next);
        const double gn = omega_e_objective(ts, next);
        if (gn <= g + 1e-13 * (1.0 + g)) {
            if (gn > g) x = std::move(next);
            break;
        }
        x = std::move(next);
        g = gn;
    }
    return x;
}

// Alternating update for sup_lambda ||sum lambda_i Ti|| on the coefficient
// sphere: with (u, v) the top singular pair of the current combination,
// lambda <- normalize(conj(u* Ti v)). Monotone for the same reason.
ComplexVector lambda_fixed_point(const std::vector<ComplexMatrix>& ts, ComplexVector lam,
                                 int max_iters) {
    const size_t n = ts.size();
    const int dim = ts.front().dim();
    auto combine = [&](const ComplexVector& l) {
        ComplexMatrix m(dim);
        for (size_t i = 0; i < n; ++i)
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) m(a, b) += l[i] * ts[i](a, b);
        return m;
    };
    double g = fast_operator_norm(combine(lam));
    for (int iter = 0; iter < max_iters; ++iter) {
        const ComplexMatrix m = combine(lam);
        const auto eig = hermitian_eigen(multiply(adjoint(m), m));
        ComplexVector v(static_cast<size_t>(dim));
        for (int a = 0; a < dim; ++a) v[static_cast<size_t>(a)] = eig.eigenvectors(a, dim - 1);
        ComplexVector mv = mat_vec(m, v);
        const double sigma = vec_norm(mv);
        if (sigma < 1e-15) break;
        for (auto& z : mv) z /= sigma;
        ComplexVector next(n);
        for (size_t i = 0; i < n; ++i) next[i] = std::conj(inner(mat_vec(ts[i], v), mv));
        normalize(next);
        canonicalize_phase(next);
        const double gn = fast_operator_norm(combine(next));
        if (gn <= g + 1e-13 * (1.0 + g)) {
            if (gn > g) lam = std::move(next);
            break;
        }
        lam = std::move(next);
        g = gn;
    }
    return lam;
}

ComplexVector tp_unit_vector(double t, double p) {
    return {Complex(std::cos(t), 0.0), std::polar(std::sin(t), p)};
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::theta_sweep: return "theta_sweep";
        case Method::lambda_ball_sweep: return "lambda_ball_sweep";
        case Method::sphere_multistart: return "sphere_multistart";
        case Method::grid_oracle: return "grid_oracle";
    }
    return "unknown";
}

double support_function(const ComplexMatrix& t, double theta) {
    return largest_eigenvalue(rotated_real_part(t, theta));
}

QuantityResult numerical_radius(const ComplexMatrix& t, const SweepConfig& cfg) {
    validate(cfg);
    ComplexMatrix scratch(t.dim());
    auto objective = [&](double th) {
        rotated_real_into(t, th, scratch);
        return largest_eigenvalue_in_place(scratch);
    };
    auto [theta, value] = sweep_circle(objective, cfg);
    QuantityResult r;
    r.value = value;
    r.method = Method::theta_sweep;
    r.theta = theta;
    r.accuracy = 1e-10 * (1.0 + std::abs(value));
    return r;
}

QuantityResult block_numerical_radius(const ComplexMatrix& a, const ComplexMatrix& b, const SweepConfig& cfg) {
    validate(cfg);
    const int n = a.dim();
    if (n != b.dim()) throw std::invalid_argument("block_numerical_radius: dimension mismatch");
    ComplexMatrix m(n), g(n);
    auto objective = [&](double th) {
        const Complex phase = std::polar(1.0, th);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = a(i, j) + phase * b(i, j);
        if (n <= 2) return 0.5 * fast_operator_norm(m);
        gram_into(m, g);
        return 0.5 * std::sqrt(std::max(0.0, largest_eigenvalue_in_place(g)));
    };
    auto [theta, value] = sweep_circle(objective, cfg);
    QuantityResult r;
    r.value = value;
    r.method = Method::theta_sweep;
    r.theta = theta;
    r.accuracy = 1e-10 * (1.0 + std::abs(value));
    return r;
}

QuantityResult sup_rotated_real_norm(const ComplexMatrix& t, const SweepConfig& cfg) {
    validate(cfg);
    ComplexMatrix scratch(t.dim());
    auto objective = [&](double th) {
        rotated_real_into(t, th, scratch);
        double lo = 0.0, hi = 0.0;
        eigenvalue_range_in_place(scratch, lo, hi);
        return std::max(-lo, hi);
    };
    auto [theta, value] = sweep_circle(objective, cfg);
    QuantityResult r;
    r.value = value;
    r.method = Method::theta_sweep;
    r.theta = theta;
    r.accuracy = 1e-10 * (1.0 + std::abs(value));
    return r;
}

QuantityResult euclidean_radius(const std::vector<ComplexMatrix>& ts, const SweepConfig& cfg) {
    validate(cfg);
    require_same_dims(ts);
    const int dim = ts.front().dim();
    QuantityResult r;

    if (dim == 1) {
        double s = 0.0;
        for (const auto& t : ts) s += std::norm(t(0, 0));
        r.value = std::sqrt(s);
        r.method = Method::grid_oracle;
        r.witness = {Complex(1.0, 0.0)};
        r.accuracy = 1e-14 * (1.0 + r.value);
        return r;
    }

    if (dim == 2) {
        // exhaustive (t, phi) scan with the inner products expanded in the
        // matrix entries, then local pattern search
        const size_t n = ts.size();
        std::vector<Complex> t00(n), t01(n), t10(n), t11(n);
        for (size_t i = 0; i < n; ++i) {
            t00[i] = ts[i](0, 0);
            t01[i] = ts[i](0, 1);
            t10[i] = ts[i](1, 0);
            t11[i] = ts[i](1, 1);
        }
        auto objective_sq = [&](double t, double p) {
            const double c = std::cos(t), s = std::sin(t);
            const double cc = c * c, ss = s * s, cs = c * s;
            const Complex e = std::polar(1.0, p);
            double acc = 0.0;
            for (size_t i = 0; i < n; ++i)
                acc += std::norm(cc * t00[i] + ss * t11[i] + cs * (t01[i] * e + t10[i] * std::conj(e)));
            return acc;
        };

        const int nt = cfg.coarse_points;
        const int np = 2 * cfg.coarse_points;
        const double ht = kHalfPi / (nt - 1);
        const double hp = kTwoPi / np;
        double best = -1.0, bt = 0.0, bp = 0.0;
        for (auto& peak : grid_peaks(objective_sq, nt, np, ht, hp, 6)) {
            double v = peak.v;
            pattern_refine_2d(objective_sq, peak.t, peak.p, std::max(ht, hp), cfg.refine_tol, v);
            if (v > best) {
                best = v;
                bt = peak.t;
                bp = peak.p;
            }
        }

        std::vector<ComplexMatrix> adjs{adjoint(ts[0])};
        for (size_t i = 1; i < ts.size(); ++i) adjs.push_back(adjoint(ts[i]));
        ComplexVector x = tp_unit_vector(bt, bp);
        canonicalize_phase(x);
        x = sphere_fixed_point(ts, adjs, std::move(x), 50);
        r.value = omega_e_objective(ts, x);
        r.method = Method::grid_oracle;
        r.witness = std::move(x);
        r.accuracy = 1e-8 * (1.0 + r.value);
        return r;
    }

    // dim >= 3: multistart projected gradient ascent, starts picked as the
    // best of a deterministic sample of the sphere
    std::vector<ComplexMatrix> adjs;
    adjs.reserve(ts.size());
    for (const auto& t : ts) adjs.push_back(adjoint(t));

    auto f = [&](const ComplexVector& x) { return omega_e_objective(ts, x); };
    auto grad = [&](const ComplexVector& x) {
        ComplexVector g(x.size(), Complex(0.0, 0.0));
        for (size_t i = 0; i < ts.size(); ++i) {
            const ComplexVector tx = mat_vec(ts[i], x);
            const ComplexVector tsx = mat_vec(adjs[i], x);
            const Complex q = inner(tx, x);
            for (size_t k = 0; k < x.size(); ++k) g[k] += std::conj(q) * tx[k] + q * tsx[k];
        }
        return g;
    };

    const int ncand = std::max(256, 16 * cfg.multistart_count);
    std::vector<std::pair<double, ComplexVector>> cands;
    cands.reserve(static_cast<size_t>(ncand));
    for (int k = 0; k < ncand; ++k) {
        Rng rng(derive_seed(kSphereSeed, "omega_e_start", static_cast<uint64_t>(k)));
        ComplexVector x = sphere_point(dim, rng);
        cands.emplace_back(f(x), std::move(x));
    }
    const size_t keep = std::min<size_t>(static_cast<size_t>(cfg.multistart_count), cands.size());
    std::partial_sort(cands.begin(), cands.begin() + static_cast<long>(keep), cands.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });

    double best = -1.0;
    ComplexVector bx;
    for (size_t k = 0; k < keep; ++k) {
        ComplexVector x0 = sphere_fixed_point(ts, adjs, std::move(cands[k].second), cfg.max_iters);
        auto [x, fx] = sphere_ascent(std::move(x0), f, grad, cfg);
        x = sphere_fixed_point(ts, adjs, std::move(x), 20);
        fx = f(x);
        if (fx > best) {
            best = fx;
            bx = std::move(x);
        }
    }
    r.value = f(bx);
    r.method = Method::sphere_multistart;
    r.witness = std::move(bx);
    r.accuracy = 1e-7 * (1.0 + r.value);
    return r;
}

QuantityResult euclidean_norm(const std::vector<ComplexMatrix>& ts, const SweepConfig& cfg) {
    validate(cfg);
    require_same_dims(ts);
    const size_t n = ts.size();
    QuantityResult r;
    r.method = Method::lambda_ball_sweep;

    auto combo = [&](const ComplexVector& lam) {
        ComplexMatrix m(ts.front().dim());
        for (size_t i = 0; i < n; ++i) {
            if (lam[i] == Complex(0.0, 0.0)) continue;
            for (int a = 0; a < m.dim(); ++a)
                for (int b = 0; b < m.dim(); ++b) m(a, b) += lam[i] * ts[i](a, b);
        }
        return m;
    };
    auto f = [&](const ComplexVector& lam) { return fast_operator_norm(combo(lam)); };

    if (n == 1) {
        r.value = operator_norm(ts.front());
        r.witness = {Complex(1.0, 0.0)};
        r.accuracy = 1e-12 * (1.0 + r.value);
        return r;
    }

    if (n == 2) {
        const int dim = ts.front().dim();
        ComplexMatrix m(dim), g(dim);
        auto build = [&](double t, double p) {
            const Complex l0(std::cos(t), 0.0);
            const Complex l1 = std::polar(std::sin(t), p);
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) m(a, b) = l0 * ts[0](a, b) + l1 * ts[1](a, b);
        };
        // Scan objective: the norm of the pencil varies slowly over (t, phi),
        // so a warm-started power iteration on the Gram matrix is enough to
        // locate the lobes; the monotone fixed point then does the actual
        // convergence with exact eigensolves.
        ComplexVector pv(static_cast<size_t>(dim), Complex(0.0, 0.0));
        pv[0] = 1.0;
        ComplexVector pw(static_cast<size_t>(dim));
        auto scan_objective = [&](double t, double p) {
            build(t, p);
            if (dim <= 2) return fast_operator_norm(m);
            gram_into(m, g);
            double lam = 0.0;
            for (int it = 0; it < 20; ++it) {
                for (int a = 0; a < dim; ++a) {
                    Complex s(0.0, 0.0);
                    for (int b = 0; b < dim; ++b) s += g(a, b) * pv[static_cast<size_t>(b)];
                    pw[static_cast<size_t>(a)] = s;
                }
                const double nn = vec_norm(pw);
                if (nn <= 0.0) return 0.0;
                for (int a = 0; a < dim; ++a) pv[static_cast<size_t>(a)] = pw[static_cast<size_t>(a)] / nn;
                if (std::abs(nn - lam) <= 1e-3 * (1.0 + nn)) {
                    lam = nn;
                    break;
                }
                lam = nn;
            }
            return std::sqrt(std::max(0.0, lam));
        };

        const int nt = cfg.coarse_points;
        const int np = 2 * cfg.coarse_points;
        const double ht = kHalfPi / (nt - 1);
        const double hp = kTwoPi / np;
        double best = -1.0;
        ComplexVector blam;
        for (const auto& peak : grid_peaks(scan_objective, nt, np, ht, hp, 6)) {
            ComplexVector lam = tp_unit_vector(peak.t, peak.p);
            canonicalize_phase(lam);
            lam = lambda_fixed_point(ts, std::move(lam), cfg.max_iters);
            const double v = f(lam);
            if (v > best) {
                best = v;
                blam = std::move(lam);
            }
        }
        r.value = f(blam);
        r.witness = std::move(blam);
        r.accuracy = 1e-8 * (1.0 + r.value);
        return r;
    }

    // general n: multistart ascent over the coefficient sphere, climbing
    // along the top singular pair of the current combination
    auto grad = [&](const ComplexVector& lam) {
        const ComplexMatrix m = combo(lam);
        const auto eig = hermitian_eigen(multiply(adjoint(m), m));
        ComplexVector v(static_cast<size_t>(m.dim()));
        for (int i = 0; i < m.dim(); ++i) v[static_cast<size_t>(i)] = eig.eigenvectors(i, m.dim() - 1);
        ComplexVector mv = mat_vec(m, v);
        const double sigma = vec_norm(mv);
        ComplexVector g(n, Complex(0.0, 0.0));
        if (sigma < 1e-15) return g;
        for (auto& w : mv) w /= sigma; // u
        for (size_t i = 0; i < n; ++i) g[i] = std::conj(inner(mat_vec(ts[i], v), mv));
        return g;
    };

    const int ncand = std::max(128, 8 * cfg.multistart_count);
    std::vector<std::pair<double, ComplexVector>> cands;
    for (size_t i = 0; i < n; ++i) { // coordinate axes are natural starts
        ComplexVector lam(n, Complex(0.0, 0.0));
        lam[i] = 1.0;
        cands.emplace_back(f(lam), std::move(lam));
    }
    for (int k = 0; k < ncand; ++k) {
        Rng rng(derive_seed(kSphereSeed, "norm_e_start", static_cast<uint64_t>(k)));
        ComplexVector lam = sphere_point(static_cast<int>(n), rng);
        cands.emplace_back(f(lam), std::move(lam));
    }
    const size_t keep = std::min<size_t>(static_cast<size_t>(cfg.multistart_count), cands.size());
    std::partial_sort(cands.begin(), cands.begin() + static_cast<long>(keep), cands.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
    double best = -1.0;
    ComplexVector blam;
    for (size_t k = 0; k < keep; ++k) {
        ComplexVector l0 = lambda_fixed_point(ts, std::move(cands[k].second), cfg.max_iters);
        auto [lam, fx] = sphere_ascent(std::move(l0), f, grad, cfg);
        lam = lambda_fixed_point(ts, std::move(lam), 20);
        fx = f(lam);
        if (fx > best) {
            best = fx;
            blam = std::move(lam);
        }
    }
    r.value = f(blam);
    r.method = Method::sphere_multistart;
    r.witness = std::move(blam);
    r.accuracy = 1e-7 * (1.0 + r.value);
    return r;
}

double euclidean_norm_xy_oracle(const std::vector<ComplexMatrix>& ts, long long samples) {
    require_same_dims(ts);
    if (samples < 1) throw std::invalid_argument("euclidean_norm_xy_oracle: samples must be positive");
    const int dim = ts.front().dim();

    auto f = [&](const ComplexVector& x, const ComplexVector& y) {
        double s = 0.0;
        for (const auto& t : ts) s += std::norm(inner(mat_vec(t, x), y));
        return std::sqrt(s);
    };

    Rng rng(kXYOracleSeed);
    ComplexVector bx, by;
    double best = -1.0;
    for (long long k = 0; k < samples; ++k) {
        ComplexVector x = sphere_point(dim, rng);
        ComplexVector y = sphere_point(dim, rng);
        const double v = f(x, y);
        if (v > best) {
            best = v;
            bx = std::move(x);
            by = std::move(y);
        }
    }

    // coordinate pattern search over the raw components of (x, y)
    for (double step = 0.1; step > 1e-9; step *= 0.5) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (int side = 0; side < 2; ++side) {
                ComplexVector& v = side == 0 ? bx : by;
                for (size_t i = 0; i < v.size(); ++i) {
                    for (const Complex delta : {Complex(step, 0.0), Complex(-step, 0.0),
                                                Complex(0.0, step), Complex(0.0, -step)}) {
                        ComplexVector trial = v;
                        trial[i] += delta;
                        normalize(trial);
                        const double ft = side == 0 ? f(trial, by) : f(bx, trial);
                        if (ft > best) {
                            best = ft;
                            v = std::move(trial);
                            moved = true;
                        }
                    }
                }
            }
        }
    }
    return best;
}

double omega_e_grid_oracle(const std::vector<ComplexMatrix>& ts, int grid) {
    require_same_dims(ts);
    if (ts.front().dim() != 2) throw std::invalid_argument("omega_e_grid_oracle: inputs must be 2x2");
    if (grid < 2) throw std::invalid_argument("omega_e_grid_oracle: grid must be >= 2");

    const size_t n = ts.size();
    std::vector<Complex> t00(n), t01(n), t10(n), t11(n);
    for (size_t i = 0; i < n; ++i) {
        t00[i] = ts[i](0, 0);
        t01[i] = ts[i](0, 1);
        t10[i] = ts[i](1, 0);
        t11[i] = ts[i](1, 1);
    }
    const int np = 2 * grid;
    double best = 0.0;
    for (int k = 0; k < np; ++k) {
        const Complex e = std::polar(1.0, kTwoPi * k / np);
        for (int j = 0; j < grid; ++j) {
            const double t = kHalfPi * j / (grid - 1);
            const double c = std::cos(t), s = std::sin(t);
            const double cc = c * c, ss = s * s, cs = c * s;
            double acc = 0.0;
            for (size_t i = 0; i < n; ++i)
                acc += std::norm(cc * t00[i] + ss * t11[i] + cs * (t01[i] * e + t10[i] * std::conj(e)));
            best = std::max(best, acc);
        }
    }
    return std::sqrt(best);
}

} // namespace opradius
