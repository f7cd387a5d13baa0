#include "hessbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hessbound/propagate.hpp"

namespace hb {

SpectralBounds gershgorin(const IntervalMatrix& H) {
    const std::size_t n = H.dim();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            r += std::fmax(-H.at(i, j).lo, H.at(i, j).hi);
        }
        lo = std::fmin(lo, H.at(i, i).lo - r);
        hi = std::fmax(hi, H.at(i, i).hi + r);
    }
    return {lo, hi};
}

namespace {

double frob_norm(const std::vector<std::vector<double>>& M) {
    double s = 0.0;
    for (const auto& row : M)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

// Cyclic Jacobi on a copy; converges quadratically for symmetric input.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> A) {
    const std::size_t n = A.size();
    const double tol = 1e-12 * std::fmax(frob_norm(A), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * A[p][q] * A[p][q];
        if (std::sqrt(off) <= tol) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = A[p][q];
                if (apq == 0.0) continue;
                const double theta = (A[q][q] - A[p][p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = A[k][p], akq = A[k][q];
                    A[k][p] = c * akp - s * akq;
                    A[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = A[p][k], aqk = A[q][k];
                    A[p][k] = c * apk - s * aqk;
                    A[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = A[i][i];
    return ev;
}

}  // namespace

std::pair<double, double> sym_eig_extremes(const std::vector<std::vector<double>>& M) {
    const std::size_t n = M.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    double maxabs = 0.0, asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) throw std::invalid_argument("matrix not square");
        for (std::size_t j = 0; j < n; ++j) {
            maxabs = std::fmax(maxabs, std::fabs(M[i][j]));
            asym = std::fmax(asym, std::fabs(M[i][j] - M[j][i]));
        }
    }
    if (asym > 1e-12 * std::fmax(maxabs, 1.0))
        throw std::invalid_argument("matrix is not symmetric");
    const auto ev = jacobi_eigenvalues(M);
    const auto [mn, mx] = std::minmax_element(ev.begin(), ev.end());
    return {*mn, *mx};
}

HertzResult hertz_rohn(const IntervalMatrix& H) {
    const std::size_t n = H.dim();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (n > kHertzDimCap)
        throw DimensionCapExceeded("vertex enumeration capped at dimension " +
                                   std::to_string(kHertzDimCap));
    const std::size_t count = std::size_t{1} << (n - 1);
    HertzResult res;
    res.vertex_matrices = 2 * count;  // one L and one U per sign column
    res.lo = std::numeric_limits<double>::infinity();
    res.hi = -res.lo;

    std::vector<int> s(n, 1);
    std::vector<std::vector<double>> L(n, std::vector<double>(n));
    std::vector<std::vector<double>> U(n, std::vector<double>(n));
    for (std::size_t k = 0; k < count; ++k) {
        // s[0] fixed to +1; remaining entries count in binary, last entry
        // least significant, bit 1 meaning -1
        for (std::size_t i = 1; i < n; ++i)
            s[i] = (k >> (n - 1 - i)) & 1 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const bool same = i == j || s[i] * s[j] == 1;
                L[i][j] = same ? H.at(i, j).lo : H.at(i, j).hi;
                U[i][j] = i == j ? H.at(i, j).hi
                                 : (same ? H.at(i, j).hi : H.at(i, j).lo);
            }
        }
        const double lmin = sym_eig_extremes(L).first;
        const double umax = sym_eig_extremes(U).second;
        if (lmin < res.lo) {
            res.lo = lmin;
            res.argmin_k = k;
        }
        if (umax > res.hi) {
            res.hi = umax;
            res.argmax_k = k;
        }
    }
    return res;
}

double alpha_bb_underestimate(double phi_x, double lambda_lo, const Box& box,
                              const std::vector<double>& x) {
    if (box.size() != x.size()) throw std::invalid_argument("point/box mismatch");
    if (lambda_lo >= 0.0) return phi_x;
    double q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        q += (box[i].lo - x[i]) * (box[i].hi - x[i]);
    // q <= 0 inside the box, so the shift is nonpositive
    return phi_x - 0.5 * lambda_lo * q;
}

namespace {

double halton(std::uint64_t index, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t c = 2; ps.size() < count; ++c) {
        bool prime = true;
        for (std::uint64_t p : ps) {
            if (p * p > c) break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) ps.push_back(c);
    }
    return ps;
}

}  // namespace

SpectralBounds sampled_oracle(const Codelist& cl, const Box& box, int samples) {
    const std::size_t n = box.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const auto eval_at = [&](const std::vector<double>& x) {
        const auto [mn, mx] = sym_eig_extremes(hessian_at_point(cl, x));
        lo = std::fmin(lo, mn);
        hi = std::fmax(hi, mx);
    };

    std::vector<double> x(n);
    const auto primes = first_primes(n);
    for (int i = 1; i <= samples; ++i) {
        for (std::size_t d = 0; d < n; ++d) {
            const double u = halton(static_cast<std::uint64_t>(i), primes[d]);
            x[d] = box[d].lo + u * box[d].width();
        }
        eval_at(x);
    }
    if (n <= 10) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            for (std::size_t d = 0; d < n; ++d)
                x[d] = (mask >> d) & 1 ? box[d].hi : box[d].lo;
            eval_at(x);
        }
    }
    return {lo, hi};
}

}  // namespace hb
