#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "infometer/pattern.hpp"

namespace infometer {

namespace kernels {
struct KernelTable;
}

enum class SpectrumKind { raw, maximal, normalized };

std::string_view to_string(SpectrumKind kind);

/// Per-scale series of bits. `scales` is strictly increasing and, unless
/// subsampled, exactly 1..floor(N/2).
struct Spectrum {
    SpectrumKind kind = SpectrumKind::raw;
    std::vector<std::size_t> scales;
    std::vector<double> bits;

    std::size_t size() const noexcept { return scales.size(); }
    bool empty() const noexcept { return scales.empty(); }
    /// Value at scale r; throws InvalidScale if r is not in the domain.
    double at(std::size_t r) const;
};

struct SpectrumOptions {
    /// Evaluate at most this many scales (0 = all). Scale 1 and floor(N/2) are always kept.
    std::size_t max_scales = 0;
    /// Worker threads for the scale scan; 0 picks hardware concurrency.
    unsigned threads = 0;
    /// Kernel variant; nullptr uses kernels::active().
    const kernels::KernelTable* kernels = nullptr;
    /// Record per-scale wall time in ScaleStats.
    bool collect_timing = false;
};

/// Work done at one scale of the scan.
struct ScaleStats {
    std::size_t scale = 0;
    std::size_t blocks = 0;          ///< m = floor(N/r)
    std::size_t distinct = 0;        ///< distinct block contents
    std::size_t probes = 0;          ///< hash-table slots inspected
    std::size_t hash_collisions = 0; ///< equal hashes, different content
    std::size_t symbol_compares = 0; ///< symbols read while confirming matches
    std::uint64_t elapsed_ns = 0;
};

/// Raw, maximal and normalized spectra from a single scan, plus scan statistics.
struct SpectrumSet {
    std::size_t n = 0;
    std::size_t k = 0; ///< alphabet size used for I_MAX and I_SMS
    std::size_t observed_k = 0;
    double i_max = 0.0;
    double i_shannon = 0.0;
    bool subsampled = false;
    Spectrum raw;
    Spectrum maximal;
    Spectrum normalized;
    std::vector<std::size_t> distinct_blocks; ///< parallel to the spectra's scales
    std::vector<ScaleStats> stats;
};

/// The scales evaluated for a length-n pattern under the options.
std::vector<std::size_t> spectrum_scales(std::size_t n, const SpectrumOptions& options = {});

/// Shannon information of each partition X^(r). Empty when N < 2.
Spectrum spectrum(const Pattern& pattern, const SpectrumOptions& options = {});

/// m*log2(min(k^r, m)) with m = floor(n/r), evaluated without forming k^r.
double max_spectrum_value(std::size_t n, std::size_t k, std::size_t scale);
Spectrum max_spectrum(std::size_t n, std::size_t k, const SpectrumOptions& options = {});
Spectrum max_spectrum(const Pattern& pattern, std::size_t k, const SpectrumOptions& options = {});

/// All three spectra. `declared_alphabet` overrides K and must be >= the observed count.
SpectrumSet spectra(const Pattern& pattern, std::optional<std::size_t> declared_alphabet = std::nullopt,
                    const SpectrumOptions& options = {});

Spectrum normalized_spectrum(const Pattern& pattern, std::optional<std::size_t> declared_alphabet = std::nullopt,
                             const SpectrumOptions& options = {});

} // namespace infometer
