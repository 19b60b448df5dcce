#include "infometer/ingest.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <map>

#include "infometer/error.hpp"
#include "infometer/kernels.hpp"

namespace infometer {

NewlinePolicy SymbolizationPolicy::effective_newline() const {
    if (newline) {
        return *newline;
    }
    return mode == SymbolMode::utf8_char ? NewlinePolicy::strip_all : NewlinePolicy::keep;
}

void SymbolizationPolicy::validate() const {
    if (mode == SymbolMode::token && token_width == 0) {
        throw InvalidArgument("token width must be at least 1");
    }
    if (declared_alphabet && *declared_alphabet == 0) {
        throw InvalidArgument("declared alphabet size must be at least 1");
    }
}

namespace {

std::vector<std::uint8_t> apply_newline(std::span<const std::uint8_t> data, NewlinePolicy policy,
                                        std::size_t& removed) {
    std::vector<std::uint8_t> out;
    out.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::uint8_t c = data[i];
        switch (policy) {
        case NewlinePolicy::keep:
            out.push_back(c);
            break;
        case NewlinePolicy::strip_all:
            if (c != '\n' && c != '\r') {
                out.push_back(c);
            }
            break;
        case NewlinePolicy::normalize_lf:
            if (c == '\r') {
                out.push_back('\n');
                if (i + 1 < data.size() && data[i + 1] == '\n') {
                    ++i;
                }
            } else {
                out.push_back(c);
            }
            break;
        }
    }
    removed = data.size() - out.size();
    return out;
}

// Length of the well-formed UTF-8 sequence at data[i], or 0.
std::size_t utf8_sequence_length(std::span<const std::uint8_t> data, std::size_t i) {
    const std::uint8_t b0 = data[i];
    std::size_t len = 0;
    std::uint8_t lo = 0x80;
    std::uint8_t hi = 0xBF;
    if (b0 < 0x80) {
        return 1;
    } else if (b0 >= 0xC2 && b0 <= 0xDF) {
        len = 2;
    } else if (b0 >= 0xE0 && b0 <= 0xEF) {
        len = 3;
        if (b0 == 0xE0) {
            lo = 0xA0; // overlong
        } else if (b0 == 0xED) {
            hi = 0x9F; // surrogates
        }
    } else if (b0 >= 0xF0 && b0 <= 0xF4) {
        len = 4;
        if (b0 == 0xF0) {
            lo = 0x90;
        } else if (b0 == 0xF4) {
            hi = 0x8F; // > U+10FFFF
        }
    } else {
        return 0;
    }
    if (i + len > data.size()) {
        return 0;
    }
    if (data[i + 1] < lo || data[i + 1] > hi) {
        return 0;
    }
    for (std::size_t k = 2; k < len; ++k) {
        if (data[i + k] < 0x80 || data[i + k] > 0xBF) {
            return 0;
        }
    }
    return len;
}

Pattern bytes_pattern(std::span<const std::uint8_t> data) {
    std::string_view text(reinterpret_cast<const char*>(data.data()), data.size());
    return Pattern::from_chars(text);
}

Pattern bits_pattern(std::span<const std::uint8_t> data) {
    std::vector<SymbolId> ids(data.size() * 8);
    kernels::active().unpack_bits_msb(data.data(), data.size(), ids.data());
    const Alphabet bits = Alphabet::from_symbols({Symbol("0"), Symbol("1")});
    return Pattern::from_ids(bits, std::move(ids));
}

Pattern chunked_pattern(std::span<const std::uint8_t> data, const std::vector<std::size_t>& bounds) {
    // bounds holds chunk start offsets plus the end offset.
    std::map<std::string_view, SymbolId> index;
    std::vector<std::string_view> chunks;
    chunks.reserve(bounds.size());
    const char* base = reinterpret_cast<const char*>(data.data());
    for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
        chunks.emplace_back(base + bounds[c], bounds[c + 1] - bounds[c]);
        index.emplace(chunks.back(), 0);
    }
    std::vector<Symbol> symbols;
    symbols.reserve(index.size());
    for (auto& [bytes, id] : index) {
        id = static_cast<SymbolId>(symbols.size());
        symbols.emplace_back(std::string(bytes));
    }
    std::vector<SymbolId> ids;
    ids.reserve(chunks.size());
    for (auto chunk : chunks) {
        ids.push_back(index.at(chunk));
    }
    return Pattern::from_ids(Alphabet::from_symbols(std::move(symbols)), std::move(ids));
}

} // namespace

IngestReport ingest_bytes(std::span<const std::uint8_t> data, const SymbolizationPolicy& policy) {
    policy.validate();
    IngestReport report;
    report.policy = policy;
    report.source_bytes = data.size();
    if (policy.mode == SymbolMode::utf8_char) {
        // Newlines are single ASCII bytes, so validating before filtering gives original offsets.
        for (std::size_t i = 0; i < data.size();) {
            const std::size_t len = utf8_sequence_length(data, i);
            if (len == 0) {
                throw DecodeError(i, "malformed UTF-8");
            }
            i += len;
        }
    }
    const auto decoded = apply_newline(data, policy.effective_newline(), report.newline_bytes_removed);

    switch (policy.mode) {
    case SymbolMode::bit:
        report.pattern = bits_pattern(decoded);
        break;
    case SymbolMode::byte:
        report.pattern = bytes_pattern(decoded);
        break;
    case SymbolMode::utf8_char: {
        std::vector<std::size_t> bounds;
        bounds.reserve(decoded.size() + 1);
        std::size_t i = 0;
        while (i < decoded.size()) {
            const std::size_t len = utf8_sequence_length(decoded, i);
            bounds.push_back(i);
            i += len;
        }
        bounds.push_back(decoded.size());
        report.pattern = chunked_pattern(decoded, bounds);
        break;
    }
    case SymbolMode::token: {
        const std::size_t w = policy.token_width;
        const std::size_t tokens = decoded.size() / w;
        std::vector<std::size_t> bounds(tokens + 1);
        for (std::size_t t = 0; t <= tokens; ++t) {
            bounds[t] = t * w;
        }
        report.dropped_symbols = decoded.size() - tokens * w;
        report.pattern = chunked_pattern(decoded, bounds);
        break;
    }
    }
    return report;
}

IngestReport ingest_bytes(std::string_view data, const SymbolizationPolicy& policy) {
    return ingest_bytes(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()), policy);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read failed for " + path.string());
    }
    return data;
}

IngestReport ingest_file(const std::filesystem::path& path, const SymbolizationPolicy& policy) {
    const auto data = read_file(path);
    return ingest_bytes(data, policy);
}

std::vector<std::uint8_t> to_bytes(const Pattern& pattern, SymbolMode mode) {
    std::vector<std::uint8_t> out;
    if (mode == SymbolMode::bit) {
        out.assign((pattern.size() + 7) / 8, 0);
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            const std::string& s = pattern.at(i).bytes;
            if (s != "0" && s != "1") {
                throw InvalidArgument("bit serialization needs symbols \"0\" and \"1\", got \"" + s + "\"");
            }
            if (s == "1") {
                out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
            }
        }
        return out;
    }
    for (SymbolId id : pattern.ids()) {
        const std::string& s = pattern.alphabet()[id].bytes;
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

std::string_view to_string(SymbolMode mode) {
    switch (mode) {
    case SymbolMode::bit: return "bit";
    case SymbolMode::byte: return "byte";
    case SymbolMode::utf8_char: return "utf8-char";
    case SymbolMode::token: return "token";
    }
    return "unknown";
}

std::string_view to_string(NewlinePolicy policy) {
    switch (policy) {
    case NewlinePolicy::keep: return "keep";
    case NewlinePolicy::strip_all: return "strip-all";
    case NewlinePolicy::normalize_lf: return "normalize-to-lf";
    }
    return "unknown";
}

SymbolizationPolicy parse_symbol_mode(std::string_view text, SymbolizationPolicy base) {
    if (text == "bit") {
        base.mode = SymbolMode::bit;
    } else if (text == "byte") {
        base.mode = SymbolMode::byte;
    } else if (text == "utf8-char" || text == "char") {
        base.mode = SymbolMode::utf8_char;
    } else if (text.starts_with("token:")) {
        const auto digits = text.substr(6);
        std::size_t w = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), w);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || w == 0) {
            throw InvalidArgument("bad token width in '" + std::string(text) + "'");
        }
        base.mode = SymbolMode::token;
        base.token_width = w;
    } else {
        throw InvalidArgument("unknown symbol mode '" + std::string(text) + "' (bit|byte|utf8-char|token:W)");
    }
    return base;
}

NewlinePolicy parse_newline(std::string_view text) {
    if (text == "keep") {
        return NewlinePolicy::keep;
    }
    if (text == "strip" || text == "strip-all") {
        return NewlinePolicy::strip_all;
    }
    if (text == "lf" || text == "normalize-to-lf") {
        return NewlinePolicy::normalize_lf;
    }
    throw InvalidArgument("unknown newline policy '" + std::string(text) + "' (keep|strip|lf)");
}

} // namespace infometer
