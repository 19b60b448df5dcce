#include "kernels_impl.hpp"

#include <arm_neon.h>

namespace infometer::kernels::detail {

bool ids_equal_neon(const SymbolId* a, const SymbolId* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const uint32x4_t eq = vceqq_u32(vld1q_u32(a + i), vld1q_u32(b + i));
        if (vminvq_u32(eq) == 0) {
            return false;
        }
    }
    for (; i < n; ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

void unpack_bits_msb_neon(const std::uint8_t* in, std::size_t n, SymbolId* out) {
    const int32x4_t hi_shift = {-7, -6, -5, -4};
    const int32x4_t lo_shift = {-3, -2, -1, 0};
    const uint32x4_t one = vdupq_n_u32(1);
    for (std::size_t i = 0; i < n; ++i) {
        const uint32x4_t v = vdupq_n_u32(in[i]);
        vst1q_u32(out + 8 * i, vandq_u32(vshlq_u32(v, hi_shift), one));
        vst1q_u32(out + 8 * i + 4, vandq_u32(vshlq_u32(v, lo_shift), one));
    }
}

} // namespace infometer::kernels::detail
