// Compiled with -mavx2; only called after a runtime CPU check.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace infometer::kernels::detail {

namespace {

// Low 64 bits of a*b per lane, from three 32x32->64 products.
inline __m256i mullo_epi64(__m256i a, __m256i b) {
    const __m256i a_hi = _mm256_srli_epi64(a, 32);
    const __m256i b_hi = _mm256_srli_epi64(b, 32);
    const __m256i lo = _mm256_mul_epu32(a, b);
    const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

} // namespace

void block_hashes_avx2(const std::uint64_t* prefix, std::size_t r, std::uint64_t base_pow_r,
                       std::uint64_t* out, std::size_t count) {
    std::size_t j = 0;
    const auto* base = reinterpret_cast<const long long*>(prefix);
    const __m256i pow = _mm256_set1_epi64x(static_cast<long long>(base_pow_r));
    // Gather indices are 64-bit and scaled by 8; fall back to scalar if j*r could overflow them.
    if (r < (std::size_t{1} << 58) / 8) {
        const auto step = static_cast<long long>(r);
        __m256i lo_idx = _mm256_set_epi64x(3 * step, 2 * step, step, 0);
        __m256i hi_idx = _mm256_add_epi64(lo_idx, _mm256_set1_epi64x(step));
        const __m256i advance = _mm256_set1_epi64x(4 * step);
        for (; j + 4 <= count; j += 4) {
            const __m256i start = _mm256_i64gather_epi64(base, lo_idx, 8);
            const __m256i end = _mm256_i64gather_epi64(base, hi_idx, 8);
            const __m256i h = _mm256_sub_epi64(end, mullo_epi64(start, pow));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), h);
            lo_idx = _mm256_add_epi64(lo_idx, advance);
            hi_idx = _mm256_add_epi64(hi_idx, advance);
        }
    }
    for (; j < count; ++j) {
        out[j] = prefix[(j + 1) * r] - prefix[j * r] * base_pow_r;
    }
}

bool ids_equal_avx2(const SymbolId* a, const SymbolId* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(va, vb)) != -1) {
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

void unpack_bits_msb_avx2(const std::uint8_t* in, std::size_t n, SymbolId* out) {
    const __m256i shifts = _mm256_setr_epi32(7, 6, 5, 4, 3, 2, 1, 0);
    const __m256i one = _mm256_set1_epi32(1);
    for (std::size_t i = 0; i < n; ++i) {
        const __m256i v = _mm256_set1_epi32(in[i]);
        const __m256i bits = _mm256_and_si256(_mm256_srlv_epi32(v, shifts), one);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 8 * i), bits);
    }
}

} // namespace infometer::kernels::detail
