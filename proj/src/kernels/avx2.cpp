#include "hessbound/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define HB_HAVE_AVX2_TU 1
#include <immintrin.h>

#include <cmath>
#endif

namespace hb::kernels {

#if HB_HAVE_AVX2_TU

namespace {

void add_avx2(const double* a, const double* b, double* dst, std::size_t m) {
    const std::size_t total = 2 * m;
    std::size_t i = 0;
    for (; i + 4 <= total; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i),
                                                _mm256_loadu_pd(b + i)));
    }
    for (; i < total; ++i) dst[i] = a[i] + b[i];
}

void scale_const_avx2(const double* a, double c, double* dst, std::size_t m) {
    const std::size_t total = 2 * m;
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    if (c >= 0.0) {
        for (; i + 4 <= total; i += 4)
            _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), vc));
        for (; i < total; ++i) dst[i] = c * a[i];
    } else {
        // endpoints swap pairwise: (c*hi, c*lo)
        for (; i + 4 <= total; i += 4) {
            const __m256d t = _mm256_mul_pd(_mm256_loadu_pd(a + i), vc);
            _mm256_storeu_pd(dst + i, _mm256_permute_pd(t, 0b0101));
        }
        for (; i + 2 <= total; i += 2) {
            const double lo = c * a[i + 1], hi = c * a[i];
            dst[i] = lo;
            dst[i + 1] = hi;
        }
    }
}

void scale_interval_avx2(const double* a, double clo, double chi, double* dst,
                         std::size_t m) {
    const std::size_t total = 2 * m;
    const __m256d vlo = _mm256_set1_pd(clo);
    const __m256d vhi = _mm256_set1_pd(chi);
    std::size_t i = 0;
    for (; i + 4 <= total; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        const __m256d p1 = _mm256_mul_pd(v, vlo);
        const __m256d p2 = _mm256_mul_pd(v, vhi);
        // min/max_pd return the second operand on equality, exactly like
        // fmin/fmax compiled here, so the operand order must mirror the
        // scalar kernel's fmin(fmin(p1,p2), fmin(p3,p4)) nesting or signed
        // zeros come out with the wrong bit pattern
        __m256d mn = _mm256_min_pd(p1, p2);
        __m256d mx = _mm256_max_pd(p1, p2);
        mn = _mm256_min_pd(mn, _mm256_permute_pd(mn, 0b0101));
        mx = _mm256_max_pd(_mm256_permute_pd(mx, 0b0101), mx);
        _mm256_storeu_pd(dst + i, _mm256_blend_pd(mn, mx, 0b1010));
    }
    for (; i + 2 <= total; i += 2) {
        const double lo = a[i], hi = a[i + 1];
        const double p1 = lo * clo, p2 = lo * chi, p3 = hi * clo, p4 = hi * chi;
        dst[i] = std::fmin(std::fmin(p1, p2), std::fmin(p3, p4));
        dst[i + 1] = std::fmax(std::fmax(p1, p2), std::fmax(p3, p4));
    }
}

}  // namespace

const Ops* avx2() {
#if defined(__GNUC__) || defined(__clang__)
    if (!__builtin_cpu_supports("avx2")) return nullptr;
#endif
    static const Ops ops{add_avx2, scale_const_avx2, scale_interval_avx2, "avx2"};
    return &ops;
}

#else

const Ops* avx2() { return nullptr; }

#endif

}  // namespace hb::kernels
