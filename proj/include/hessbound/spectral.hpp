#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hessbound/codelist.hpp"
#include "hessbound/interval.hpp"

namespace hb {

struct DimensionCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpectralBounds {
    double lo = 0.0;
    double hi = 0.0;
};

// Gershgorin discs over the interval matrix: row i contributes
// [H_ii.lo - r_i, H_ii.hi + r_i] with r_i = sum_{j != i} max(-H_ij.lo, H_ij.hi).
SpectralBounds gershgorin(const IntervalMatrix& H);

struct HertzResult {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t vertex_matrices = 0;  // 2^n: an L and a U per sign column
    std::size_t argmin_k = 0;         // sign column attaining lo / hi
    std::size_t argmax_k = 0;
};

// Vertex enumeration over 2^(n-1) sign patterns; exact for symmetric
// interval matrices but exponential, so dimension is capped.
inline constexpr std::size_t kHertzDimCap = 16;
HertzResult hertz_rohn(const IntervalMatrix& H);

// (lambda_min, lambda_max) of a symmetric matrix via cyclic Jacobi.
// Rejects matrices whose asymmetry exceeds 1e-12 relative.
std::pair<double, double> sym_eig_extremes(const std::vector<std::vector<double>>& M);

// Convex underestimator value at x: phi(x) shifted by the quadratic
// perturbation built from lambda_lo (a lower bound on the Hessian
// spectrum over the box). Returns phi(x) unchanged when lambda_lo >= 0.
double alpha_bb_underestimate(double phi_x, double lambda_lo, const Box& box,
                              const std::vector<double>& x);

// Inner estimate of the true eigenvalue range: min/max eigenvalues of
// exact Hessians sampled at Halton points (plus box vertices for n <= 10).
// Any guaranteed outer bound must contain this interval.
SpectralBounds sampled_oracle(const Codelist& cl, const Box& box, int samples);

}  // namespace hb
