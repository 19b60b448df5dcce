#pragma once
// Serialization of CLI records. JSON and CSV carry the same numeric values:
// doubles are written in shortest round-trip form in both.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "infometer/baselines.hpp"
#include "infometer/ingest.hpp"
#include "infometer/measures.hpp"
#include "infometer/spectrum.hpp"

namespace infometer::cli {

inline constexpr int kSchemaVersion = 1;

struct InputInfo {
    std::string descriptor;
    std::size_t source_bytes = 0;
    std::size_t newline_bytes_removed = 0;
    std::size_t dropped_symbols = 0;
    SymbolizationPolicy policy;
};

struct Provenance {
    std::string version;
    std::string kernels;
};

struct OutputRecord {
    InputInfo input;
    MeasureReport measures;
    /// Spectra in the order they should be emitted.
    std::vector<Spectrum> spectra;
    std::optional<std::vector<baselines::BackendOutcome>> compression;
    bool overhead_dominated = false;
    std::optional<Provenance> provenance;
};

std::string format_double(double v);
std::string csv_escape(const std::string& s);

/// Smallest scale attaining the minimum of `s`; 0 when empty.
std::size_t argmin_scale(const Spectrum& s);

nlohmann::ordered_json to_json(const OutputRecord& record);
/// Long-form rows: section,key,scale,kind,value.
std::string to_csv(const OutputRecord& record);

/// Long-form spectrum rows: scale,kind,bits,argmin.
std::string spectrum_csv(const std::vector<Spectrum>& spectra);
nlohmann::ordered_json spectrum_json(const InputInfo& input, const std::vector<Spectrum>& spectra,
                                     const std::optional<Provenance>& provenance);

std::string stats_csv(const std::vector<ScaleStats>& stats);

/// Absolute and relative tables in the layout of a compressor comparison.
std::string comparison_table(const InputInfo& input, const baselines::ComparisonReport& report);

} // namespace infometer::cli
