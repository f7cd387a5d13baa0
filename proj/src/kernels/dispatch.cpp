#include "hessbound/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hb::kernels {

namespace {

const Ops& select() {
    if (const char* want = std::getenv("HESSBOUND_KERNEL")) {
        if (std::strcmp(want, "scalar") == 0) return scalar();
        if (std::strcmp(want, "avx2") == 0) {
            if (const Ops* o = avx2()) return *o;
        }
        if (std::strcmp(want, "neon") == 0) {
            if (const Ops* o = neon()) return *o;
        }
        // unknown or unavailable: fall through to auto-detection
    }
    if (const Ops* o = avx2()) return *o;
    if (const Ops* o = neon()) return *o;
    return scalar();
}

}  // namespace

const Ops& active() {
    static const Ops& chosen = select();
    return chosen;
}

}  // namespace hb::kernels
