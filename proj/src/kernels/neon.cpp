#include "hessbound/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <cmath>
#endif

namespace hb::kernels {

#if defined(__aarch64__)

namespace {

void add_neon(const double* a, const double* b, double* dst, std::size_t m) {
    const std::size_t total = 2 * m;
    std::size_t i = 0;
    for (; i + 2 <= total; i += 2)
        vst1q_f64(dst + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < total; ++i) dst[i] = a[i] + b[i];
}

void scale_const_neon(const double* a, double c, double* dst, std::size_t m) {
    const std::size_t total = 2 * m;
    const float64x2_t vc = vdupq_n_f64(c);
    if (c >= 0.0) {
        std::size_t i = 0;
        for (; i + 2 <= total; i += 2)
            vst1q_f64(dst + i, vmulq_f64(vld1q_f64(a + i), vc));
        for (; i < total; ++i) dst[i] = c * a[i];
    } else {
        for (std::size_t i = 0; i + 2 <= total; i += 2) {
            const float64x2_t t = vmulq_f64(vld1q_f64(a + i), vc);
            vst1q_f64(dst + i, vextq_f64(t, t, 1));  // swap (lo,hi) pair
        }
    }
}

// FMIN/FMAX order signed zeros (-0 < +0) exactly like fmin/fmax, so the
// result is bit-identical to the scalar kernel
void scale_interval_neon(const double* a, double clo, double chi, double* dst,
                         std::size_t m) {
    const float64x2_t vlo = vdupq_n_f64(clo);
    const float64x2_t vhi = vdupq_n_f64(chi);
    for (std::size_t i = 0; i < 2 * m; i += 2) {
        const float64x2_t v = vld1q_f64(a + i);
        const float64x2_t p1 = vmulq_f64(v, vlo);
        const float64x2_t p2 = vmulq_f64(v, vhi);
        float64x2_t mn = vminq_f64(p1, p2);
        float64x2_t mx = vmaxq_f64(p1, p2);
        mn = vminq_f64(mn, vextq_f64(mn, mn, 1));
        mx = vmaxq_f64(mx, vextq_f64(mx, mx, 1));
        dst[i] = vgetq_lane_f64(mn, 0);
        dst[i + 1] = vgetq_lane_f64(mx, 1);
    }
}

}  // namespace

const Ops* neon() {
    static const Ops ops{add_neon, scale_const_neon, scale_interval_neon, "neon"};
    return &ops;
}

#else

const Ops* neon() { return nullptr; }

#endif

}  // namespace hb::kernels
