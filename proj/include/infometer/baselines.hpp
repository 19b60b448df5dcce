#pragma once
// Compression-complexity estimators used as comparison baselines.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infometer/error.hpp"
#include "infometer/measures.hpp"
#include "infometer/pattern.hpp"

namespace infometer::baselines {

/// Declaration order is the deterministic reporting order.
enum class BackendId { zip_family, sevenz_family, zpaq_family, custom_command };

std::string_view to_string(BackendId id);
/// Accepts zip, deflate, zip-family, 7z, 7z-family, zpaq, zpaq-family, custom.
BackendId parse_backend_id(std::string_view text);

struct CompressionResult {
    BackendId backend = BackendId::zip_family;
    std::string version;
    std::size_t input_bits = 0;
    std::size_t output_bits = 0;
    /// output_bits / input_bits; 0 for empty input.
    double ratio = 0.0;
    bool container_overhead_included = true;
    /// Fixed container bytes inside output_bits, when the codec exposes them.
    std::optional<std::size_t> container_overhead_bits;
};

/// A backend could not produce a measurement. Never converted into a number.
class BackendSkipped : public Error {
public:
    BackendSkipped(BackendId id, const std::string& reason, std::string transcript = {});
    BackendId backend() const noexcept { return id_; }
    const std::string& transcript() const noexcept { return transcript_; }

private:
    BackendId id_;
    std::string transcript_;
};

class Compressor {
public:
    virtual ~Compressor() = default;
    virtual BackendId id() const = 0;
    virtual bool available() const = 0;
    virtual std::string version() const = 0;
    /// Throws BackendSkipped on failure.
    virtual CompressionResult compress(std::span<const std::uint8_t> data) const = 0;
};

/// Built-in zlib deflate at level 9 (zlib container: 2-byte header, 4-byte Adler-32).
class DeflateCompressor final : public Compressor {
public:
    BackendId id() const override { return BackendId::zip_family; }
    bool available() const override { return true; }
    std::string version() const override;
    CompressionResult compress(std::span<const std::uint8_t> data) const override;

    std::vector<std::uint8_t> compress_bytes(std::span<const std::uint8_t> data) const;
};

/// Shell command with {input} and {output} placeholders; the compressed size is the
/// size of {output} after the command exits with status 0.
struct CommandTemplate {
    std::string command;
    std::string version_command;
};

/// External tool adapter. The first candidate whose program is on PATH is used.
class ExternalCompressor final : public Compressor {
public:
    ExternalCompressor(BackendId id, std::vector<CommandTemplate> candidates, std::chrono::milliseconds timeout);

    BackendId id() const override { return id_; }
    bool available() const override { return chosen_.has_value(); }
    std::string version() const override;
    CompressionResult compress(std::span<const std::uint8_t> data) const override;

    const std::optional<CommandTemplate>& chosen() const noexcept { return chosen_; }

private:
    BackendId id_;
    std::vector<CommandTemplate> candidates_;
    std::optional<CommandTemplate> chosen_;
    std::chrono::milliseconds timeout_;
    mutable std::optional<std::string> version_;
};

struct BackendConfig {
    std::map<BackendId, std::vector<CommandTemplate>> commands;
    std::chrono::milliseconds timeout{60'000};
};

/// 7z-family tries 7z, 7za, 7zr, then xz; zpaq-family tries zpaq; custom has no default.
BackendConfig default_config();
/// key=value lines; '#' starts a comment. Keys: 7z.command, 7z.version, zpaq.command,
/// zpaq.version, custom.command, custom.version, timeout_seconds.
void load_config_file(const std::filesystem::path& path, BackendConfig& config);
void load_config_text(std::string_view text, BackendConfig& config);
/// INFOMETER_7Z_CMD and INFOMETER_ZPAQ_CMD: a full template (containing {input}) or a tool path.
void apply_environment(BackendConfig& config);

std::unique_ptr<Compressor> make_backend(BackendId id, const BackendConfig& config);

/// Throws BackendSkipped when the backend is unavailable or fails.
CompressionResult compression_complexity(std::span<const std::uint8_t> data, const Compressor& backend);

struct BackendOutcome {
    BackendId backend = BackendId::zip_family;
    std::optional<CompressionResult> result;
    std::string skip_reason;
    std::string transcript;
};

struct ComparisonReport {
    MeasureReport measures;
    std::size_t input_bits = 0;
    /// Inputs under 1024 bits: container overhead dominates the compressed sizes.
    bool overhead_dominated = false;
    /// Sorted by backend id.
    std::vector<BackendOutcome> backends;
};

inline constexpr std::size_t kOverheadDominatedBits = 1024;

/// Measures `pattern` and compresses `data` (the bytes the pattern was ingested from)
/// with every backend; backends run concurrently.
ComparisonReport compare(const Pattern& pattern, std::span<const std::uint8_t> data,
                         std::span<const Compressor* const> backends, const MeasureOptions& options = {});

/// Runs `/bin/sh -c command` with a timeout, capturing both output streams.
struct ProcessResult {
    int exit_code = -1;
    bool timed_out = false;
    std::string out;
    std::string err;
};
ProcessResult run_shell(const std::string& command, std::chrono::milliseconds timeout);

/// Resolves the first word of a command against PATH.
std::optional<std::filesystem::path> find_program(std::string_view command);

} // namespace infometer::baselines
