#pragma once

#include <cstddef>

// Elementwise interval kernels over interleaved (lo,hi) double arrays.
// `m` counts intervals, so the arrays hold 2*m doubles. All variants of a
// kernel compute numerically identical results (same operations per
// element, no reassociation), so the runtime choice never changes output.
namespace hb::kernels {

struct Ops {
    // dst[i] = a[i] + b[i]
    void (*add)(const double* a, const double* b, double* dst, std::size_t m);
    // dst[i] = c * a[i]   (endpoints swap for c < 0)
    void (*scale_const)(const double* a, double c, double* dst, std::size_t m);
    // dst[i] = [clo, chi] * a[i]   (four-product rule per element)
    void (*scale_interval)(const double* a, double clo, double chi, double* dst,
                           std::size_t m);
    const char* name;
};

const Ops& scalar();
const Ops* avx2();  // nullptr when unsupported by compiler or CPU
const Ops* neon();  // nullptr off ARM

// Best available variant; override with HESSBOUND_KERNEL=scalar|avx2|neon
// (evaluated once, at first use).
const Ops& active();

}  // namespace hb::kernels
