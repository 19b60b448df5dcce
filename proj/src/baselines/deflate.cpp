#include <zlib.h>

#include "infometer/baselines.hpp"

namespace infometer::baselines {

std::string DeflateCompressor::version() const {
    return std::string("zlib ") + zlibVersion() + " level 9";
}

std::vector<std::uint8_t> DeflateCompressor::compress_bytes(std::span<const std::uint8_t> data) const {
    uLongf size = compressBound(static_cast<uLong>(data.size()));
    std::vector<std::uint8_t> out(size);
    const int rc = compress2(out.data(), &size, data.data(), static_cast<uLong>(data.size()), Z_BEST_COMPRESSION);
    if (rc != Z_OK) {
        throw BackendSkipped(BackendId::zip_family, "zlib compress2 failed with code " + std::to_string(rc));
    }
    out.resize(size);
    return out;
}

CompressionResult DeflateCompressor::compress(std::span<const std::uint8_t> data) const {
    const auto packed = compress_bytes(data);
    CompressionResult r;
    r.backend = id();
    r.version = version();
    r.input_bits = data.size() * 8;
    r.output_bits = packed.size() * 8;
    r.ratio = r.input_bits != 0 ? static_cast<double>(r.output_bits) / static_cast<double>(r.input_bits) : 0.0;
    r.container_overhead_included = true;
    r.container_overhead_bits = 6 * 8;
    return r;
}

} // namespace infometer::baselines
