#include "hessbound/kernels.hpp"

#include <cmath>

namespace hb::kernels {

namespace {

void add_scalar(const double* a, const double* b, double* dst, std::size_t m) {
    for (std::size_t i = 0; i < 2 * m; ++i) dst[i] = a[i] + b[i];
}

void scale_const_scalar(const double* a, double c, double* dst, std::size_t m) {
    if (c >= 0.0) {
        for (std::size_t i = 0; i < 2 * m; ++i) dst[i] = c * a[i];
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            const double lo = c * a[2 * i + 1];
            const double hi = c * a[2 * i];
            dst[2 * i] = lo;
            dst[2 * i + 1] = hi;
        }
    }
}

void scale_interval_scalar(const double* a, double clo, double chi, double* dst,
                           std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) {
        const double lo = a[2 * i], hi = a[2 * i + 1];
        const double p1 = lo * clo, p2 = lo * chi, p3 = hi * clo, p4 = hi * chi;
        dst[2 * i] = std::fmin(std::fmin(p1, p2), std::fmin(p3, p4));
        dst[2 * i + 1] = std::fmax(std::fmax(p1, p2), std::fmax(p3, p4));
    }
}

}  // namespace

const Ops& scalar() {
    static const Ops ops{add_scalar, scale_const_scalar, scale_interval_scalar,
                         "scalar"};
    return ops;
}

}  // namespace hb::kernels
