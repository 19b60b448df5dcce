#include "output.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace infometer::cli {

using nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out += "\"";
    return out;
}

std::size_t argmin_scale(const Spectrum& s) {
    std::size_t best = 0;
    double value = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (best == 0 || s.bits[i] < value) {
            best = s.scales[i];
            value = s.bits[i];
        }
    }
    return best;
}

namespace {

ordered_json policy_json(const SymbolizationPolicy& p) {
    ordered_json j;
    j["symbol"] = std::string(to_string(p.mode));
    j["token_width"] = p.mode == SymbolMode::token ? ordered_json(p.token_width) : ordered_json(nullptr);
    j["newline"] = std::string(to_string(p.effective_newline()));
    j["declared_alphabet"] = p.declared_alphabet ? ordered_json(*p.declared_alphabet) : ordered_json(nullptr);
    return j;
}

ordered_json input_json(const InputInfo& in) {
    ordered_json j;
    j["descriptor"] = in.descriptor;
    j["source_bytes"] = in.source_bytes;
    j["newline_bytes_removed"] = in.newline_bytes_removed;
    j["dropped_symbols"] = in.dropped_symbols;
    return j;
}

ordered_json bits_json(double v) {
    ordered_json j;
    j["bits"] = round_bits(v);
    j["value_bits_exact"] = v;
    return j;
}

ordered_json fraction_json(double v) {
    ordered_json j;
    j["percent"] = round_bits(v * 100.0);
    j["value_exact"] = v;
    return j;
}

ordered_json outcome_json(const baselines::BackendOutcome& o, double i_max) {
    ordered_json j;
    j["backend"] = std::string(baselines::to_string(o.backend));
    if (o.result) {
        const auto& r = *o.result;
        j["status"] = "ok";
        j["version"] = r.version;
        j["input_bits"] = r.input_bits;
        j["output_bits"] = r.output_bits;
        j["ratio"] = r.ratio;
        j["relative_to_i_max"] = relative_information(static_cast<double>(r.output_bits), i_max);
        j["container_overhead_included"] = r.container_overhead_included;
        j["container_overhead_bits"] =
            r.container_overhead_bits ? ordered_json(*r.container_overhead_bits) : ordered_json(nullptr);
    } else {
        j["status"] = "skipped";
        j["reason"] = o.skip_reason;
        j["transcript"] = o.transcript;
    }
    return j;
}

struct CsvWriter {
    std::ostringstream out;

    void row(const std::string& section, const std::string& key, const std::string& value,
             const std::string& scale = {}, const std::string& kind = {}) {
        out << section << ',' << csv_escape(key) << ',' << scale << ',' << kind << ',' << csv_escape(value) << '\n';
    }
    void bits(const std::string& key, double v) {
        row("measures", key + ".bits", std::to_string(round_bits(v)));
        row("measures", key + ".value_bits_exact", format_double(v));
    }
    void fraction(const std::string& key, double v) {
        row("measures", key + ".percent", std::to_string(round_bits(v * 100.0)));
        row("measures", key + ".value_exact", format_double(v));
    }
};

} // namespace

ordered_json to_json(const OutputRecord& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = input_json(r.input);
    j["policy"] = policy_json(r.input.policy);
    ordered_json m;
    m["n"] = r.measures.n;
    m["k"] = r.measures.k;
    m["argmin_scale"] = r.measures.argmin_scale;
    m["scales_subsampled"] = r.measures.scales_subsampled;
    m["i_max"] = bits_json(r.measures.i_max);
    m["i_shannon"] = bits_json(r.measures.i_shannon);
    m["i_ssm"] = bits_json(r.measures.i_ssm);
    m["i_shannon_rel"] = fraction_json(r.measures.i_shannon_rel);
    m["i_ssm_rel"] = fraction_json(r.measures.i_ssm_rel);
    j["measures"] = m;
    if (!r.spectra.empty()) {
        ordered_json rows = ordered_json::array();
        for (const auto& s : r.spectra) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                rows.push_back({{"scale", s.scales[i]}, {"kind", std::string(to_string(s.kind))}, {"bits", s.bits[i]}});
            }
        }
        j["spectrum"] = rows;
    }
    if (r.compression) {
        ordered_json rows = ordered_json::array();
        for (const auto& o : *r.compression) {
            rows.push_back(outcome_json(o, r.measures.i_max));
        }
        j["compression"] = rows;
        j["overhead_dominated"] = r.overhead_dominated;
    }
    if (r.provenance) {
        j["provenance"] = {{"version", r.provenance->version}, {"kernels", r.provenance->kernels}};
    }
    return j;
}

std::string to_csv(const OutputRecord& r) {
    CsvWriter w;
    w.out << "section,key,scale,kind,value\n";
    w.row("record", "schema_version", std::to_string(kSchemaVersion));
    w.row("input", "descriptor", r.input.descriptor);
    w.row("input", "source_bytes", std::to_string(r.input.source_bytes));
    w.row("input", "newline_bytes_removed", std::to_string(r.input.newline_bytes_removed));
    w.row("input", "dropped_symbols", std::to_string(r.input.dropped_symbols));
    const auto& p = r.input.policy;
    w.row("policy", "symbol", std::string(to_string(p.mode)));
    w.row("policy", "token_width", p.mode == SymbolMode::token ? std::to_string(p.token_width) : "");
    w.row("policy", "newline", std::string(to_string(p.effective_newline())));
    w.row("policy", "declared_alphabet", p.declared_alphabet ? std::to_string(*p.declared_alphabet) : "");
    const auto& m = r.measures;
    w.row("measures", "n", std::to_string(m.n));
    w.row("measures", "k", std::to_string(m.k));
    w.row("measures", "argmin_scale", std::to_string(m.argmin_scale));
    w.row("measures", "scales_subsampled", m.scales_subsampled ? "true" : "false");
    w.bits("i_max", m.i_max);
    w.bits("i_shannon", m.i_shannon);
    w.bits("i_ssm", m.i_ssm);
    w.fraction("i_shannon_rel", m.i_shannon_rel);
    w.fraction("i_ssm_rel", m.i_ssm_rel);
    for (const auto& s : r.spectra) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            w.row("spectrum", "bits", format_double(s.bits[i]), std::to_string(s.scales[i]),
                  std::string(to_string(s.kind)));
        }
    }
    if (r.compression) {
        w.row("compression", "overhead_dominated", r.overhead_dominated ? "true" : "false");
        for (const auto& o : *r.compression) {
            const std::string id(baselines::to_string(o.backend));
            if (o.result) {
                w.row("compression", id + ".status", "ok");
                w.row("compression", id + ".version", o.result->version);
                w.row("compression", id + ".input_bits", std::to_string(o.result->input_bits));
                w.row("compression", id + ".output_bits", std::to_string(o.result->output_bits));
                w.row("compression", id + ".ratio", format_double(o.result->ratio));
                w.row("compression", id + ".relative_to_i_max",
                      format_double(relative_information(static_cast<double>(o.result->output_bits), m.i_max)));
                w.row("compression", id + ".container_overhead_included",
                      o.result->container_overhead_included ? "true" : "false");
            } else {
                w.row("compression", id + ".status", "skipped");
                w.row("compression", id + ".reason", o.skip_reason);
            }
        }
    }
    if (r.provenance) {
        w.row("provenance", "version", r.provenance->version);
        w.row("provenance", "kernels", r.provenance->kernels);
    }
    return w.out.str();
}

std::string spectrum_csv(const std::vector<Spectrum>& spectra) {
    std::ostringstream out;
    out << "scale,kind,bits,argmin\n";
    for (const auto& s : spectra) {
        const std::size_t best = argmin_scale(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            out << s.scales[i] << ',' << to_string(s.kind) << ',' << format_double(s.bits[i]) << ','
                << (s.scales[i] == best ? 1 : 0) << '\n';
        }
    }
    return out.str();
}

ordered_json spectrum_json(const InputInfo& input, const std::vector<Spectrum>& spectra,
                           const std::optional<Provenance>& provenance) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = input_json(input);
    j["policy"] = policy_json(input.policy);
    ordered_json argmins;
    ordered_json rows = ordered_json::array();
    for (const auto& s : spectra) {
        const std::size_t best = argmin_scale(s);
        argmins[std::string(to_string(s.kind))] = best;
        for (std::size_t i = 0; i < s.size(); ++i) {
            rows.push_back({{"scale", s.scales[i]},
                            {"kind", std::string(to_string(s.kind))},
                            {"bits", s.bits[i]},
                            {"argmin", s.scales[i] == best}});
        }
    }
    j["argmin"] = argmins;
    j["rows"] = rows;
    if (provenance) {
        j["provenance"] = {{"version", provenance->version}, {"kernels", provenance->kernels}};
    }
    return j;
}

std::string stats_csv(const std::vector<ScaleStats>& stats) {
    std::ostringstream out;
    out << "scale,blocks,distinct,probes,hash_collisions,symbol_compares,elapsed_ns\n";
    for (const auto& s : stats) {
        out << s.scale << ',' << s.blocks << ',' << s.distinct << ',' << s.probes << ',' << s.hash_collisions << ','
            << s.symbol_compares << ',' << s.elapsed_ns << '\n';
    }
    return out.str();
}

std::string comparison_table(const InputInfo& input, const baselines::ComparisonReport& report) {
    const auto& m = report.measures;
    std::ostringstream out;
    out << "Pattern: " << input.descriptor << "  (N=" << m.n << ", K=" << m.k << ", input " << report.input_bits
        << " bits, " << to_string(input.policy.mode) << " symbols)\n\n";

    auto cell = [](const std::string& s, int width) {
        std::ostringstream c;
        c << std::setw(width) << s;
        return c.str();
    };
    std::vector<std::string> headers{"I_MAX", "I_S", "I_SSM"};
    std::vector<std::string> absolute{std::to_string(round_bits(m.i_max)), std::to_string(round_bits(m.i_shannon)),
                                      std::to_string(round_bits(m.i_ssm))};
    std::vector<std::string> rel_headers{"I_S %", "I_SSM %"};
    std::vector<std::string> relative{std::to_string(round_bits(m.i_shannon_rel * 100.0)),
                                      std::to_string(round_bits(m.i_ssm_rel * 100.0))};
    std::vector<std::string> notes;
    for (const auto& o : report.backends) {
        const std::string id(baselines::to_string(o.backend));
        headers.push_back(id);
        rel_headers.push_back(id + " %");
        if (!o.result) {
            absolute.push_back("skipped");
            relative.push_back("skipped");
            notes.push_back(o.skip_reason);
        } else if (report.overhead_dominated) {
            absolute.push_back("");
            relative.push_back("");
        } else {
            absolute.push_back(std::to_string(o.result->output_bits));
            relative.push_back(std::to_string(
                round_bits(relative_information(static_cast<double>(o.result->output_bits), m.i_max) * 100.0)));
            notes.push_back(id + ": " + o.result->version);
        }
    }
    auto emit = [&](const std::string& title, const std::vector<std::string>& head,
                    const std::vector<std::string>& values) {
        out << title << "\n";
        std::vector<int> widths;
        for (std::size_t i = 0; i < head.size(); ++i) {
            widths.push_back(static_cast<int>(std::max(head[i].size(), values[i].size())) + 2);
        }
        for (std::size_t i = 0; i < head.size(); ++i) {
            out << cell(head[i], widths[i]);
        }
        out << "\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << cell(values[i], widths[i]);
        }
        out << "\n\n";
    };
    emit("Absolute [bits]", headers, absolute);
    emit("Relative to I_MAX", rel_headers, relative);
    if (report.overhead_dominated) {
        notes.push_back("input under " + std::to_string(baselines::kOverheadDominatedBits) +
                        " bits: compressor sizes are overhead-dominated and left blank (see --format json)");
    }
    for (const auto& n : notes) {
        out << "note: " << n << "\n";
    }
    return out.str();
}

} // namespace infometer::cli
