#include "hessbound/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "doctest.h"
#include "gen.hpp"
#include "hessbound/propagate.hpp"

using namespace hb;

namespace {

// the worked example's interval Hessian, as published (3 decimals)
IntervalMatrix printed_example_hessian() {
    IntervalMatrix H(3);
    H.at(0, 0) = {0.298, 1.777};
    H.set_sym(0, 1, {-4.265, 0.7109});
    H.set_sym(0, 2, {0.000, 3.999});
    H.at(1, 1) = {-7.109, 3.128};
    H.set_sym(1, 2, {-9.597, 1.599});
    H.at(2, 2) = {-12.795, 24.991};
    return H;
}

std::pair<double, double> eigen_extremes(const std::vector<std::vector<double>>& M) {
    const auto n = static_cast<Eigen::Index>(M.size());
    Eigen::MatrixXd A(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            A(i, j) = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    return {solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff()};
}

std::vector<std::vector<double>> random_symmetric(gen::SplitMix64& rng, int n) {
    std::vector<std::vector<double>> M(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = -10 + 20 * rng.uniform();
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    return M;
}

IntervalMatrix random_interval_matrix(gen::SplitMix64& rng, int n) {
    IntervalMatrix H(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        for (std::size_t j = i; j < static_cast<std::size_t>(n); ++j) {
            const double a = -10 + 20 * rng.uniform();
            const double b = -10 + 20 * rng.uniform();
            H.set_sym(i, j, Interval(std::fmin(a, b), std::fmax(a, b)));
        }
    return H;
}

// exact tight bounds by enumerating every vertex of the interval matrix
// (all off-diagonal sign combinations; extreme diagonals are optimal)
std::pair<double, double> brute_force_tight(const IntervalMatrix& H) {
    const int n = static_cast<int>(H.dim());
    std::vector<std::pair<int, int>> off;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) off.emplace_back(i, j);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    std::vector<std::vector<double>> M(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
    for (std::size_t mask = 0; mask < (std::size_t{1} << off.size()); ++mask) {
        for (std::size_t e = 0; e < off.size(); ++e) {
            const auto [i, j] = off[e];
            const Interval& c = H.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            const double v = (mask >> e) & 1 ? c.hi : c.lo;
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
        for (int i = 0; i < n; ++i)
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                H.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)).lo;
        lo = std::fmin(lo, eigen_extremes(M).first);
        for (int i = 0; i < n; ++i)
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                H.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)).hi;
        hi = std::fmax(hi, eigen_extremes(M).second);
    }
    return {lo, hi};
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("jacobi agrees with an independent eigensolver") {
    gen::SplitMix64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 8);
        const auto M = random_symmetric(rng, n);
        const auto [jlo, jhi] = sym_eig_extremes(M);
        const auto [elo, ehi] = eigen_extremes(M);
        double fro = 0.0;
        for (const auto& row : M)
            for (double v : row) fro += v * v;
        const double tol = 1e-9 * std::fmax(1.0, std::sqrt(fro));
        CHECK(std::fabs(jlo - elo) <= tol);
        CHECK(std::fabs(jhi - ehi) <= tol);
    }
}

TEST_CASE("asymmetric input is rejected") {
    std::vector<std::vector<double>> M{{1.0, 2.0}, {2.1, 1.0}};
    CHECK_THROWS_AS(sym_eig_extremes(M), std::invalid_argument);
}

TEST_CASE("gershgorin on the published example matrix") {
    const SpectralBounds g = gershgorin(printed_example_hessian());
    // radii 8.264 / 13.862 / 13.596, extremes from row 3
    CHECK(std::fabs(g.lo - -26.391) <= 5e-4);
    CHECK(std::fabs(g.hi - 38.587) <= 5e-4);
}

TEST_CASE("gershgorin diagonal-only matrix is exact") {
    IntervalMatrix H(2);
    H.at(0, 0) = {1, 2};
    H.at(1, 1) = {-3, 5};
    const SpectralBounds g = gershgorin(H);
    CHECK(g.lo == -3.0);
    CHECK(g.hi == 5.0);
}

TEST_CASE("hertz_rohn on the published example matrix") {
    const IntervalMatrix H = printed_example_hessian();
    const HertzResult h = hertz_rohn(H);
    CHECK(h.vertex_matrices == 8);
    CHECK(std::fabs(h.lo - -20.597) <= 5e-4);
    CHECK(std::fabs(h.hi - 29.603) <= 5e-4);

    // published minimizing vertex matrix L^(2)
    const std::vector<std::vector<double>> L2{{0.298, 0.711, 3.999},
                                              {0.711, -7.109, -9.597},
                                              {3.999, -9.597, -12.795}};
    CHECK(std::fabs(sym_eig_extremes(L2).first - -20.597) <= 1e-3);
    // published maximizing vertex matrix U^(3)
    const std::vector<std::vector<double>> U3{{1.777, -4.265, 3.999},
                                              {-4.265, 3.128, -9.597},
                                              {3.999, -9.597, 24.991}};
    CHECK(std::fabs(sym_eig_extremes(U3).second - 29.603) <= 1e-3);
}

TEST_CASE("hertz_rohn equals brute-force tight bounds (n <= 4)") {
    gen::SplitMix64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 4);
        const IntervalMatrix H = random_interval_matrix(rng, n);
        const HertzResult h = hertz_rohn(H);
        const auto [blo, bhi] = brute_force_tight(H);
        CHECK(std::fabs(h.lo - blo) <= 1e-9 * std::fmax(1.0, std::fabs(blo)));
        CHECK(std::fabs(h.hi - bhi) <= 1e-9 * std::fmax(1.0, std::fabs(bhi)));
        const SpectralBounds g = gershgorin(H);
        CHECK(g.lo <= h.lo + 1e-9);
        CHECK(h.hi <= g.hi + 1e-9);
    }
}

TEST_CASE("hertz_rohn dimension cap") {
    IntervalMatrix H(kHertzDimCap + 1);
    for (std::size_t i = 0; i < H.dim(); ++i) H.at(i, i) = {0, 1};
    CHECK_THROWS_AS(hertz_rohn(H), DimensionCapExceeded);
}

TEST_CASE("alpha_bb underestimator") {
    const Box box{{Interval(-1, 2), Interval(0, 3)}};
    SUBCASE("nonnegative lambda keeps the function") {
        CHECK(alpha_bb_underestimate(5.0, 0.5, box, {0.0, 1.0}) == 5.0);
        CHECK(alpha_bb_underestimate(5.0, 0.0, box, {0.0, 1.0}) == 5.0);
    }
    SUBCASE("negative lambda shifts down inside, not at vertices") {
        const double inside = alpha_bb_underestimate(5.0, -2.0, box, {0.5, 1.5});
        CHECK(inside < 5.0);
        CHECK(alpha_bb_underestimate(5.0, -2.0, box, {-1.0, 0.0}) ==
              doctest::Approx(5.0));
        CHECK(alpha_bb_underestimate(5.0, -2.0, box, {2.0, 3.0}) ==
              doctest::Approx(5.0));
    }
    SUBCASE("hand value") {
        // q = (-1-0.5)(2-0.5) + (0-1.5)(3-1.5) = -2.25 - 2.25 = -4.5
        CHECK(alpha_bb_underestimate(1.0, -2.0, box, {0.5, 1.5}) ==
              doctest::Approx(1.0 - 0.5 * 2.0 * 4.5));
    }
}

TEST_CASE("sampled oracle lies inside every guaranteed bound") {
    const Codelist cl = Codelist::parse("exp(x1-2*x2^2+3*x3^3)", 3);
    const Box box{{Interval(-0.3, 0.2), Interval(-0.1, 0.6), Interval(-0.4, 0.5)}};
    const SpectralBounds inner = sampled_oracle(cl, box, 64);
    const EvalTrace t = propagate(cl, box, {Mode::Both});
    const SpectralBounds g = gershgorin(t.hessian);
    const HertzResult h = hertz_rohn(t.hessian);
    const double tol = 1e-9;
    CHECK(t.eig.lo - tol <= inner.lo);
    CHECK(inner.hi <= t.eig.hi + tol);
    CHECK(g.lo - tol <= inner.lo);
    CHECK(inner.hi <= g.hi + tol);
    CHECK(h.lo - tol <= inner.lo);
    CHECK(inner.hi <= h.hi + tol);
}

}  // TEST_SUITE
