#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "infometer/baselines.hpp"
#include "temp_dir.hpp"

namespace infometer::baselines {

std::string_view to_string(BackendId id) {
    switch (id) {
    case BackendId::zip_family: return "zip-family";
    case BackendId::sevenz_family: return "7z-family";
    case BackendId::zpaq_family: return "zpaq-family";
    case BackendId::custom_command: return "custom";
    }
    return "unknown";
}

BackendId parse_backend_id(std::string_view text) {
    if (text == "zip" || text == "zip-family" || text == "deflate") {
        return BackendId::zip_family;
    }
    if (text == "7z" || text == "7z-family") {
        return BackendId::sevenz_family;
    }
    if (text == "zpaq" || text == "zpaq-family") {
        return BackendId::zpaq_family;
    }
    if (text == "custom") {
        return BackendId::custom_command;
    }
    throw InvalidArgument("unknown backend '" + std::string(text) + "' (zip|7z|zpaq|custom)");
}

BackendSkipped::BackendSkipped(BackendId id, const std::string& reason, std::string transcript)
    : Error(std::string(to_string(id)) + " skipped: " + reason), id_(id), transcript_(std::move(transcript)) {}

namespace {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out.push_back(c);
        }
    }
    out += "'";
    return out;
}

std::string substitute(std::string command, const std::string& key, const std::string& value) {
    for (std::size_t pos = command.find(key); pos != std::string::npos; pos = command.find(key, pos + value.size())) {
        command.replace(pos, key.size(), value);
    }
    return command;
}

std::string first_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line.erase(0, line.find_first_not_of(" \t\r"));
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        if (!line.empty()) {
            return line;
        }
    }
    return {};
}

std::string transcript_of(const std::string& command, const ProcessResult& r) {
    std::ostringstream t;
    t << "$ " << command << "\n";
    if (r.timed_out) {
        t << "[timed out]\n";
    } else {
        t << "[exit " << r.exit_code << "]\n";
    }
    if (!r.out.empty()) {
        t << "stdout:\n" << r.out << (r.out.back() == '\n' ? "" : "\n");
    }
    if (!r.err.empty()) {
        t << "stderr:\n" << r.err << (r.err.back() == '\n' ? "" : "\n");
    }
    return t.str();
}

std::string config_prefix(BackendId id) {
    switch (id) {
    case BackendId::sevenz_family: return "7z";
    case BackendId::zpaq_family: return "zpaq";
    case BackendId::custom_command: return "custom";
    case BackendId::zip_family: return "zip";
    }
    return {};
}

} // namespace

ExternalCompressor::ExternalCompressor(BackendId id, std::vector<CommandTemplate> candidates,
                                       std::chrono::milliseconds timeout)
    : id_(id), candidates_(std::move(candidates)), timeout_(timeout) {
    for (const auto& c : candidates_) {
        if (find_program(c.command)) {
            chosen_ = c;
            break;
        }
    }
}

std::string ExternalCompressor::version() const {
    if (!chosen_) {
        return {};
    }
    if (!version_) {
        std::string v;
        if (!chosen_->version_command.empty()) {
            const auto r = run_shell(chosen_->version_command, std::chrono::milliseconds(10'000));
            v = first_line(r.out);
            if (v.empty()) {
                v = first_line(r.err);
            }
        }
        version_ = v.empty() ? "unknown" : v;
    }
    return *version_;
}

CompressionResult ExternalCompressor::compress(std::span<const std::uint8_t> data) const {
    if (!chosen_) {
        std::string tried;
        for (const auto& c : candidates_) {
            tried += (tried.empty() ? "" : "; ") + c.command;
        }
        throw BackendSkipped(id_, candidates_.empty() ? "no command configured" : "tool not found on PATH",
                             tried.empty() ? std::string{} : "tried: " + tried + "\n");
    }
    TempDir dir;
    const auto input = dir.path() / "input.bin";
    const auto output = dir.path() / "output.bin";
    {
        std::ofstream f(input, std::ios::binary);
        f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
        if (!f) {
            throw BackendSkipped(id_, "cannot write temporary input " + input.string());
        }
    }
    const std::string command = substitute(substitute(chosen_->command, "{input}", shell_quote(input.string())),
                                           "{output}", shell_quote(output.string()));
    const auto r = run_shell(command, timeout_);
    if (r.timed_out) {
        throw BackendSkipped(id_, "timed out after " + std::to_string(timeout_.count()) + " ms",
                             transcript_of(command, r));
    }
    std::error_code ec;
    if (r.exit_code != 0 || !std::filesystem::is_regular_file(output, ec)) {
        throw BackendSkipped(id_,
                             r.exit_code != 0 ? "exit status " + std::to_string(r.exit_code) : "no output produced",
                             transcript_of(command, r));
    }
    CompressionResult res;
    res.backend = id_;
    res.version = version();
    res.input_bits = data.size() * 8;
    res.output_bits = static_cast<std::size_t>(std::filesystem::file_size(output)) * 8;
    res.ratio = res.input_bits != 0 ? static_cast<double>(res.output_bits) / static_cast<double>(res.input_bits) : 0.0;
    res.container_overhead_included = true;
    return res;
}

BackendConfig default_config() {
    BackendConfig c;
    auto& sevenz = c.commands[BackendId::sevenz_family];
    for (const char* tool : {"7z", "7za", "7zr"}) {
        const std::string t(tool);
        sevenz.push_back({t + " a -t7z -mx=9 -bd -y {output}.7z {input} >/dev/null && mv {output}.7z {output}",
                          t + " i"});
    }
    sevenz.push_back({"xz -9e -c {input} > {output}", "xz --version"});
    c.commands[BackendId::zpaq_family] = {
        {"zpaq a {output}.zpaq {input} -m5 >/dev/null && mv {output}.zpaq {output}", "zpaq"}};
    c.commands[BackendId::custom_command] = {};
    return c;
}

void load_config_text(std::string_view text, BackendConfig& config) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::map<BackendId, CommandTemplate> overrides;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key=value");
        }
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "timeout_seconds") {
            try {
                config.timeout = std::chrono::milliseconds(static_cast<long long>(std::stod(value) * 1000.0));
            } catch (const std::exception&) {
                throw InvalidArgument("config line " + std::to_string(lineno) + ": bad timeout '" + value + "'");
            }
            continue;
        }
        bool matched = false;
        for (BackendId id : {BackendId::sevenz_family, BackendId::zpaq_family, BackendId::custom_command}) {
            const std::string prefix = config_prefix(id);
            if (key == prefix + ".command") {
                if (value.find("{input}") == std::string::npos || value.find("{output}") == std::string::npos) {
                    throw InvalidArgument("config line " + std::to_string(lineno) + ": " + key +
                                          " needs {input} and {output}");
                }
                overrides[id].command = value;
                matched = true;
            } else if (key == prefix + ".version") {
                overrides[id].version_command = value;
                matched = true;
            }
        }
        if (!matched) {
            throw InvalidArgument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    for (auto& [id, tmpl] : overrides) {
        auto& slot = config.commands[id];
        if (tmpl.command.empty()) {
            // Version-only override applies to every existing candidate.
            for (auto& c : slot) {
                c.version_command = tmpl.version_command;
            }
        } else {
            slot = {tmpl};
        }
    }
}

void load_config_file(const std::filesystem::path& path, BackendConfig& config) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    load_config_text(ss.str(), config);
}

void apply_environment(BackendConfig& config) {
    const std::pair<const char*, BackendId> vars[] = {{"INFOMETER_7Z_CMD", BackendId::sevenz_family},
                                                      {"INFOMETER_ZPAQ_CMD", BackendId::zpaq_family}};
    for (const auto& [name, id] : vars) {
        const char* value = std::getenv(name);
        if (value == nullptr || *value == '\0') {
            continue;
        }
        const std::string v(value);
        if (v.find("{input}") != std::string::npos) {
            config.commands[id] = {{v, ""}};
            continue;
        }
        // A bare tool path replaces the program of the first default candidate.
        auto defaults = default_config().commands[id];
        CommandTemplate t = defaults.front();
        const std::string program = t.command.substr(0, t.command.find(' '));
        t.command = v + t.command.substr(program.size());
        t.version_command = v + t.version_command.substr(std::min(program.size(), t.version_command.size()));
        config.commands[id] = {t};
    }
}

std::unique_ptr<Compressor> make_backend(BackendId id, const BackendConfig& config) {
    if (id == BackendId::zip_family) {
        return std::make_unique<DeflateCompressor>();
    }
    auto it = config.commands.find(id);
    std::vector<CommandTemplate> candidates = it != config.commands.end() ? it->second : std::vector<CommandTemplate>{};
    return std::make_unique<ExternalCompressor>(id, std::move(candidates), config.timeout);
}

CompressionResult compression_complexity(std::span<const std::uint8_t> data, const Compressor& backend) {
    // Unavailable backends throw BackendSkipped listing the commands they tried.
    return backend.compress(data);
}

} // namespace infometer::baselines
