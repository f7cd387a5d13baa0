#include "hessbound/interval.hpp"

#include "hessbound/kernels.hpp"

namespace hb {

IntervalVector operator+(const IntervalVector& a, const IntervalVector& b) {
    IntervalVector r(a.size());
    kernels::active().add(a.raw(), b.raw(), r.raw(), a.size());
    return r;
}

IntervalVector scale(const IntervalVector& a, double c) {
    IntervalVector r(a.size());
    kernels::active().scale_const(a.raw(), c, r.raw(), a.size());
    return r;
}

IntervalVector scale(const IntervalVector& a, const Interval& c) {
    IntervalVector r(a.size());
    kernels::active().scale_interval(a.raw(), c.lo, c.hi, r.raw(), a.size());
    return r;
}

IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b) {
    IntervalMatrix r(a.dim());
    kernels::active().add(a.raw(), b.raw(), r.raw(), a.cells());
    return r;
}

IntervalMatrix scale(const IntervalMatrix& a, double c) {
    IntervalMatrix r(a.dim());
    kernels::active().scale_const(a.raw(), c, r.raw(), a.cells());
    return r;
}

IntervalMatrix scale(const IntervalMatrix& a, const Interval& c) {
    IntervalMatrix r(a.dim());
    kernels::active().scale_interval(a.raw(), c.lo, c.hi, r.raw(), a.cells());
    return r;
}

namespace {

// sum_i max(lo_i^2, hi_i^2), accumulated left to right
double sq_norm_hi(const IntervalVector& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::fmax(a[i].lo * a[i].lo, a[i].hi * a[i].hi);
    return s;
}

}  // namespace

Interval lambda_aat(const IntervalVector& a) {
    return {0.0, sq_norm_hi(a)};
}

Interval lambda_abba(const IntervalVector& a, const IntervalVector& b) {
    const double beta = std::sqrt(sq_norm_hi(a) * sq_norm_hi(b));
    Interval r(-beta, beta);
    for (std::size_t i = 0; i < a.size(); ++i) r = r + a[i] * b[i];
    return r;
}

}  // namespace hb
