#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infometer/pattern.hpp"

namespace infometer {

enum class SymbolMode { bit, byte, utf8_char, token };
enum class NewlinePolicy { keep, strip_all, normalize_lf };

/// How raw bytes become symbols. Bits are expanded most-significant first.
struct SymbolizationPolicy {
    SymbolMode mode = SymbolMode::byte;
    /// Bytes per token in token mode.
    std::size_t token_width = 1;
    /// Unset means: strip_all for utf8_char, keep otherwise.
    std::optional<NewlinePolicy> newline;
    std::optional<std::size_t> declared_alphabet;

    NewlinePolicy effective_newline() const;
    /// Throws InvalidArgument.
    void validate() const;
};

struct IngestReport {
    Pattern pattern;
    std::size_t source_bytes = 0;
    /// Bytes removed by the newline policy before symbolization.
    std::size_t newline_bytes_removed = 0;
    /// Trailing bytes that did not fill a whole token.
    std::size_t dropped_symbols = 0;
    SymbolizationPolicy policy;
};

/// Throws DecodeError for malformed UTF-8 in utf8_char mode.
IngestReport ingest_bytes(std::span<const std::uint8_t> data, const SymbolizationPolicy& policy);
IngestReport ingest_bytes(std::string_view data, const SymbolizationPolicy& policy);
/// Throws IoError naming the path.
IngestReport ingest_file(const std::filesystem::path& path, const SymbolizationPolicy& policy);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Inverse of ingestion: concatenated symbol bytes, or packed MSB-first bits in bit
/// mode (a partial final byte is zero-padded).
std::vector<std::uint8_t> to_bytes(const Pattern& pattern, SymbolMode mode);

std::string_view to_string(SymbolMode mode);
std::string_view to_string(NewlinePolicy policy);
/// Accepts bit, byte, utf8-char, token:W.
SymbolizationPolicy parse_symbol_mode(std::string_view text, SymbolizationPolicy base = {});
/// Accepts keep, strip, strip-all, lf, normalize-to-lf.
NewlinePolicy parse_newline(std::string_view text);

} // namespace infometer
