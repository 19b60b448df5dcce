#pragma once
// Per-ISA kernel entry points. Each variant lives in its own translation unit
// so it can be compiled with ISA-specific flags.

#include "infometer/kernels.hpp"

namespace infometer::kernels::detail {

void block_hashes_scalar(const std::uint64_t* prefix, std::size_t r, std::uint64_t base_pow_r,
                         std::uint64_t* out, std::size_t count);
bool ids_equal_scalar(const SymbolId* a, const SymbolId* b, std::size_t n);
void unpack_bits_msb_scalar(const std::uint8_t* in, std::size_t n, SymbolId* out);

#if defined(INFOMETER_HAVE_AVX2)
void block_hashes_avx2(const std::uint64_t* prefix, std::size_t r, std::uint64_t base_pow_r,
                       std::uint64_t* out, std::size_t count);
bool ids_equal_avx2(const SymbolId* a, const SymbolId* b, std::size_t n);
void unpack_bits_msb_avx2(const std::uint8_t* in, std::size_t n, SymbolId* out);
#endif

#if defined(INFOMETER_HAVE_NEON)
bool ids_equal_neon(const SymbolId* a, const SymbolId* b, std::size_t n);
void unpack_bits_msb_neon(const std::uint8_t* in, std::size_t n, SymbolId* out);
#endif

} // namespace infometer::kernels::detail
