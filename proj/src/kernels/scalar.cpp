#include "kernels_impl.hpp"

namespace infometer::kernels::detail {

void block_hashes_scalar(const std::uint64_t* prefix, std::size_t r, std::uint64_t base_pow_r,
                         std::uint64_t* out, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
        out[j] = prefix[(j + 1) * r] - prefix[j * r] * base_pow_r;
    }
}

bool ids_equal_scalar(const SymbolId* a, const SymbolId* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

void unpack_bits_msb_scalar(const std::uint8_t* in, std::size_t n, SymbolId* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned byte = in[i];
        for (int bit = 7; bit >= 0; --bit) {
            *out++ = (byte >> bit) & 1u;
        }
    }
}

} // namespace infometer::kernels::detail
