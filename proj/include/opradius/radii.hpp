#pragma once

#include <vector>

#include "opradius/matrix.hpp"

namespace opradius {

enum class Method { theta_sweep, lambda_ball_sweep, sphere_multistart, grid_oracle };

const char* method_name(Method m);

/// Optimizer knobs shared by every sup-computation. coarse_points applies per
/// angular dimension (theta sweeps use it directly; (t,phi) grids use
/// coarse_points in t and twice that in phi, matching the quarter/full period
/// ranges).
struct SweepConfig {
    int coarse_points = 720;
    double refine_tol = 1e-12;
    int multistart_count = 32;
    int max_iters = 500;
};

/// A computed sup-quantity. `value` is a certified lower bound: it is the
/// objective re-evaluated at the reported witness. `accuracy` estimates the
/// gap to the true supremum.
struct QuantityResult {
    double value = 0.0;
    Method method = Method::theta_sweep;
    double theta = 0.0;       // maximizing angle for theta sweeps
    ComplexVector witness;    // maximizing unit vector / coefficient tuple
    double accuracy = 0.0;
};

/// lambda_max of Re(e^{i theta} t).
double support_function(const ComplexMatrix& t, double theta);

/// omega(t) = max over theta of the support function; coarse grid plus
/// golden-section refinement around the best bracket.
QuantityResult numerical_radius(const ComplexMatrix& t, const SweepConfig& cfg = {});

/// omega of the antidiagonal block [[O, a], [b*, O]], computed as
/// (1/2) sup_theta ||a + e^{i theta} b||.
QuantityResult block_numerical_radius(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const SweepConfig& cfg = {});

/// sup over theta of ||Re(e^{i theta} t)||. Equals omega(t); kept as a
/// distinct route so the identity can be cross-checked.
QuantityResult sup_rotated_real_norm(const ComplexMatrix& t, const SweepConfig& cfg = {});

/// omega_e(T1,...,Tn) = sup over unit x of sqrt(sum |<Ti x, x>|^2).
/// dim 2 runs an exhaustive (t,phi) grid with pattern-search refinement;
/// dim >= 3 runs multistart projected gradient ascent on the unit sphere.
QuantityResult euclidean_radius(const std::vector<ComplexMatrix>& ts, const SweepConfig& cfg = {});

/// ||(T1,...,Tn)||_e = sup over the complex coefficient ball of
/// ||sum lambda_i Ti||. n = 2 sweeps lambda = (cos t, e^{i phi} sin t);
/// general n runs multistart ascent on the coefficient sphere.
QuantityResult euclidean_norm(const std::vector<ComplexMatrix>& ts, const SweepConfig& cfg = {});

/// Lower-bound estimate of ||.||_e from the sup_{x,y} formula: seeded random
/// unit pairs plus coordinate pattern-search refinement. Cross-check oracle.
double euclidean_norm_xy_oracle(const std::vector<ComplexMatrix>& ts, long long samples);

/// Deterministic brute force for omega_e on dim-2 inputs: max over the
/// (t,phi) grid (grid x 2*grid points) with no refinement.
double omega_e_grid_oracle(const std::vector<ComplexMatrix>& ts, int grid);

} // namespace opradius
