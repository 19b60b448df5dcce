#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infometer/ingest.hpp"
#include "infometer/pattern.hpp"

namespace infometer::corpus {

enum class Unit { bit, character };

/// Values printed for a fixture; absent fields were not printed.
struct Expected {
    std::optional<std::int64_t> i_max;
    std::optional<std::int64_t> i_shannon;
    std::optional<std::int64_t> i_ssm;
};

/// One of the embedded example patterns.
struct Fixture {
    std::string_view id;
    std::string_view description;
    /// Exact text. Bit fixtures are '0'/'1' characters; multi-line fixtures keep '\n' line breaks.
    std::string_view content;
    Unit unit;
    /// Length as printed in the example table: symbols with line breaks removed.
    std::size_t printed_length;
    /// Ingestion policy that reproduces the expected values from `content`.
    SymbolizationPolicy policy;
    Expected expected;
};

std::span<const Fixture> fixtures();
/// Throws InvalidArgument for unknown ids. Accepts "X_A" and "XA".
const Fixture& find_fixture(std::string_view id);
/// The fixture content ingested under its own policy.
Pattern fixture(std::string_view id);
/// Bytes suitable for external tools: packed MSB-first bits for bit fixtures, text otherwise.
std::vector<std::uint8_t> fixture_bytes(const Fixture& f);

enum class GeneratorKind { uniform_random, repeat, repeat_with_errors, ramp };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::uniform_random;
    std::vector<Symbol> alphabet;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    /// repeat / repeat_with_errors: the repeating section.
    std::vector<Symbol> period;
    /// repeat_with_errors: round(length * error_rate) positions are substituted.
    double error_rate = 0.0;
};

/// Deterministic for a given spec on every platform. Throws InvalidArgument.
Pattern generate(const GeneratorSpec& spec);

std::vector<Symbol> symbols_of(std::string_view chars);
std::vector<Symbol> binary_alphabet();

/// Seeded 80000-bit stand-ins for the truncated binary signals.
struct SignalSet {
    Pattern periodic;
    Pattern noisy_periodic;
    Pattern random;
};
SignalSet binary_signals(std::size_t length = 80000, std::uint64_t seed = 1);

/// English-like text: seeded words from a fixed vocabulary, space separated.
std::string english_like_text(std::size_t length, std::uint64_t seed);

/// Counts positions where two equal-length patterns differ.
std::size_t hamming_distance(const Pattern& a, const Pattern& b);

} // namespace infometer::corpus
