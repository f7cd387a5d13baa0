#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hb {

// Raised when an operation leaves its mathematical domain (1/[b] with
// 0 in [b], sqrt/ln of a (partially) nonpositive interval, ...).
// `line` is filled in by the codelist executors, -1 otherwise.
struct DomainViolation : std::runtime_error {
    explicit DomainViolation(const std::string& msg, int line_ = -1)
        : std::runtime_error(msg), line(line_) {}
    int line;
};

// Closed real interval [lo, hi] with finite endpoints.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double point) : Interval(point, point) {}
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(std::isfinite(lo) && std::isfinite(hi)))
            throw std::invalid_argument("interval endpoints must be finite");
        if (lo > hi)
            throw std::invalid_argument("interval with lo > hi");
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    // this ⊆ other
    bool subset_of(const Interval& other) const {
        return other.lo <= lo && hi <= other.hi;
    }
    bool operator==(const Interval&) const = default;
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi;
    const double p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::fmin(std::fmin(p1, p2), std::fmin(p3, p4)),
            std::fmax(std::fmax(p1, p2), std::fmax(p3, p4))};
}

inline Interval add_const(const Interval& a, double c) {
    return {a.lo + c, a.hi + c};
}

inline Interval mul_by_const(const Interval& a, double c) {
    return c >= 0.0 ? Interval{c * a.lo, c * a.hi} : Interval{c * a.hi, c * a.lo};
}

inline Interval one_over(const Interval& b) {
    if (b.contains_zero())
        throw DomainViolation("1/[b] with 0 in [b]");
    return {1.0 / b.hi, 1.0 / b.lo};
}

// Natural power, m >= 2.
inline Interval pow_nat(const Interval& a, int m) {
    if (m < 2) throw std::invalid_argument("pow_nat requires m >= 2");
    const auto p = [m](double x) { return std::pow(x, m); };
    if (a.lo > 0.0 || m % 2 == 1) return {p(a.lo), p(a.hi)};
    if (a.hi < 0.0) return {p(a.hi), p(a.lo)};
    return {0.0, p(std::fmax(-a.lo, a.hi))};
}

inline Interval sqrt_i(const Interval& a) {
    if (a.lo < 0.0)
        throw DomainViolation("sqrt of interval reaching below 0");
    return {std::sqrt(a.lo), std::sqrt(a.hi)};
}

inline Interval exp_i(const Interval& a) {
    return {std::exp(a.lo), std::exp(a.hi)};
}

inline Interval ln_i(const Interval& a) {
    // strict positivity: ln on [0, .] has no finite lower endpoint
    if (a.lo <= 0.0)
        throw DomainViolation("ln of interval reaching 0 or below");
    return {std::log(a.lo), std::log(a.hi)};
}

// Relative outward inflation; eps = 0 is the identity.
inline Interval inflate(const Interval& a, double eps) {
    if (eps <= 0.0) return a;
    const double d = eps * std::fmax(1.0, std::fmax(std::fabs(a.lo), std::fabs(a.hi)));
    return {a.lo - d, a.hi + d};
}

// Interval vector of fixed length. Storage is contiguous (lo,hi) pairs so
// the SIMD kernels can operate on the raw double array.
class IntervalVector {
public:
    IntervalVector() = default;
    explicit IntervalVector(std::size_t n) : v_(n) {}
    IntervalVector(std::initializer_list<Interval> init) : v_(init) {}

    static IntervalVector unit(std::size_t k, std::size_t n) {
        IntervalVector e(n);
        e[k] = Interval(1.0);
        return e;
    }

    std::size_t size() const { return v_.size(); }
    Interval& operator[](std::size_t i) { return v_[i]; }
    const Interval& operator[](std::size_t i) const { return v_[i]; }
    double* raw() { return reinterpret_cast<double*>(v_.data()); }
    const double* raw() const { return reinterpret_cast<const double*>(v_.data()); }
    bool operator==(const IntervalVector&) const = default;

private:
    std::vector<Interval> v_;
};

// Symmetric n x n interval matrix, row-major.
class IntervalMatrix {
public:
    IntervalMatrix() = default;
    explicit IntervalMatrix(std::size_t n) : n_(n), v_(n * n) {}

    std::size_t dim() const { return n_; }
    Interval& at(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
    const Interval& at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
    // assigns (i,j) and (j,i)
    void set_sym(std::size_t i, std::size_t j, const Interval& x) {
        v_[i * n_ + j] = x;
        v_[j * n_ + i] = x;
    }
    std::size_t cells() const { return v_.size(); }
    double* raw() { return reinterpret_cast<double*>(v_.data()); }
    const double* raw() const { return reinterpret_cast<const double*>(v_.data()); }
    bool operator==(const IntervalMatrix&) const = default;

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

private:
    std::size_t n_ = 0;
    std::vector<Interval> v_;
};

// Axis-aligned hyperrectangle.
struct Box {
    std::vector<Interval> dims;

    Box() = default;
    explicit Box(std::vector<Interval> d) : dims(std::move(d)) {}
    std::size_t size() const { return dims.size(); }
    Interval& operator[](std::size_t i) { return dims[i]; }
    const Interval& operator[](std::size_t i) const { return dims[i]; }
    bool contains(const std::vector<double>& x) const {
        if (x.size() != dims.size()) return false;
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (!dims[i].contains(x[i])) return false;
        return true;
    }
};

// elementwise, kernel-backed
IntervalVector operator+(const IntervalVector& a, const IntervalVector& b);
IntervalVector scale(const IntervalVector& a, double c);
IntervalVector scale(const IntervalVector& a, const Interval& c);
IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix scale(const IntervalMatrix& a, double c);
IntervalMatrix scale(const IntervalMatrix& a, const Interval& c);

// Spectral bound [0, sum_i max(lo_i^2, hi_i^2)] for the rank-1 matrix set
// { a a^T : a in [a] }.
Interval lambda_aat(const IntervalVector& a);

// Spectral bound [-beta, beta] + sum_i [a_i][b_i] for { a b^T + b a^T }.
Interval lambda_abba(const IntervalVector& a, const IntervalVector& b);

}  // namespace hb
