#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "infometer/pattern.hpp"
#include "infometer/spectrum.hpp"

namespace infometer {

/// Occurrence counts of the symbols that actually occur.
struct FrequencyTable {
    std::map<Symbol, std::size_t> counts;
    std::size_t total = 0;

    /// Relative frequency p(x); 0 for symbols that do not occur.
    double probability(const Symbol& s) const;
};

FrequencyTable frequencies(const Pattern& pattern);

/// Sum over positions of log2(1/p(x_i)), i.e. sum over symbols of f*log2(N/f).
double shannon_information(const Pattern& pattern);
double shannon_information(const FrequencyTable& table);
/// Same quantity from raw counts with n = sum of counts.
double shannon_information(std::span<const std::size_t> counts);

/// n*log2(k); 0 when n == 0 or k <= 1.
double max_information(std::size_t n, std::size_t k);

/// i / i_max, or 0 when i_max == 0.
double relative_information(double bits, double max_bits);

/// Round-half-up to integer bits (reporting boundary only).
std::int64_t round_bits(double bits);

struct MeasureOptions {
    /// Alphabet size to use instead of the observed distinct count. Must be >= observed.
    std::optional<std::size_t> declared_alphabet;
    SpectrumOptions spectrum;
};

/// Alphabet size used by the measures: declared if given, otherwise observed.
std::size_t effective_alphabet(const Pattern& pattern, const MeasureOptions& options);

struct SsmResult {
    double bits = 0.0;
    /// Smallest scale attaining the minimum; 0 when the spectrum is empty.
    std::size_t argmin_scale = 0;
};

SsmResult ssm_information(const Pattern& pattern, const MeasureOptions& options = {});

struct MeasureReport {
    std::size_t n = 0;
    std::size_t k = 0;
    double i_max = 0.0;
    double i_shannon = 0.0;
    double i_ssm = 0.0;
    std::size_t argmin_scale = 0;
    double i_shannon_rel = 0.0;
    double i_ssm_rel = 0.0;
    bool scales_subsampled = false;
};

/// Throws InvariantViolation if the ordering chain I_SSM <= I_S <= I_MAX breaks (K <= N).
MeasureReport measure(const Pattern& pattern, const MeasureOptions& options = {});
/// Builds the report from already computed spectra.
MeasureReport measure(const Pattern& pattern, const SpectrumSet& spectra);

} // namespace infometer
