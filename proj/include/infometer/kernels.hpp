#pragma once
// Data-parallel inner loops of the spectrum scan and of bit ingestion.
//
// Every kernel has a scalar reference; SIMD variants must produce
// bit-identical output and are selected once at runtime from CPU features.
// INFOMETER_KERNELS=scalar|avx2|neon overrides the choice.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "infometer/pattern.hpp"

namespace infometer::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

struct KernelTable {
    Isa isa;

    /// out[j] = prefix[(j+1)*r] - prefix[j*r] * base_pow_r  (mod 2^64), j < out.size().
    void (*block_hashes)(const std::uint64_t* prefix, std::size_t r, std::uint64_t base_pow_r,
                         std::uint64_t* out, std::size_t count);

    /// Element-wise equality of two id runs of equal length n.
    bool (*ids_equal)(const SymbolId* a, const SymbolId* b, std::size_t n);

    /// Expands bytes MSB-first into one 0/1 value per bit; out must hold 8*n values.
    void (*unpack_bits_msb)(const std::uint8_t* in, std::size_t n, SymbolId* out);
};

const KernelTable& scalar();
/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* for_isa(Isa isa);
/// Best available table, honouring INFOMETER_KERNELS.
const KernelTable& active();
std::vector<Isa> available();

/// Multiplier of the polynomial prefix hash.
inline constexpr std::uint64_t kHashBase = 0x100000001b3ULL * 2 + 1;

/// prefix[0] = 0, prefix[i+1] = prefix[i]*kHashBase + ids[i] + 1  (mod 2^64).
std::vector<std::uint64_t> prefix_hashes(std::span<const SymbolId> ids);

} // namespace infometer::kernels
