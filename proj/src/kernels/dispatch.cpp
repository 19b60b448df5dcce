#include "infometer/kernels.hpp"

#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace infometer::kernels {

namespace {

const KernelTable kScalar{Isa::scalar, &detail::block_hashes_scalar, &detail::ids_equal_scalar,
                          &detail::unpack_bits_msb_scalar};

#if defined(INFOMETER_HAVE_AVX2)
const KernelTable kAvx2{Isa::avx2, &detail::block_hashes_avx2, &detail::ids_equal_avx2,
                        &detail::unpack_bits_msb_avx2};

bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}
#endif

#if defined(INFOMETER_HAVE_NEON)
// NEON lacks a 64x64 multiply, so hash extraction reuses the scalar loop.
const KernelTable kNeon{Isa::neon, &detail::block_hashes_scalar, &detail::ids_equal_neon,
                        &detail::unpack_bits_msb_neon};
#endif

const KernelTable& pick() {
    const char* forced = std::getenv("INFOMETER_KERNELS");
    if (forced != nullptr) {
        const std::string name(forced);
        for (Isa isa : available()) {
            if (to_string(isa) == name) {
                return *for_isa(isa);
            }
        }
    }
    const auto isas = available();
    return *for_isa(isas.back());
}

} // namespace

std::string_view to_string(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

const KernelTable& scalar() { return kScalar; }

const KernelTable* for_isa(Isa isa) {
    switch (isa) {
    case Isa::scalar: return &kScalar;
    case Isa::avx2:
#if defined(INFOMETER_HAVE_AVX2)
        return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
        return nullptr;
#endif
    case Isa::neon:
#if defined(INFOMETER_HAVE_NEON)
        return &kNeon;
#else
        return nullptr;
#endif
    }
    return nullptr;
}

std::vector<Isa> available() {
    std::vector<Isa> out{Isa::scalar};
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        if (for_isa(isa) != nullptr) {
            out.push_back(isa);
        }
    }
    return out;
}

const KernelTable& active() {
    static const KernelTable& table = pick();
    return table;
}

std::vector<std::uint64_t> prefix_hashes(std::span<const SymbolId> ids) {
    std::vector<std::uint64_t> prefix(ids.size() + 1);
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        h = h * kHashBase + static_cast<std::uint64_t>(ids[i]) + 1;
        prefix[i + 1] = h;
    }
    return prefix;
}

} // namespace infometer::kernels
