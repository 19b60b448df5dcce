#include "infometer/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "infometer/baselines.hpp"
#include "infometer/corpus.hpp"
#include "infometer/error.hpp"
#include "infometer/ingest.hpp"
#include "infometer/kernels.hpp"
#include "infometer/measures.hpp"
#include "output.hpp"

namespace infometer::cli {

namespace {

struct InputOptions {
    std::string path;
    std::string fixture;
    std::string generated;
    std::size_t generated_length = 80000;
    std::uint64_t seed = 1;
    std::string symbol;
    std::string newline;
    std::size_t declared_alphabet = 0;
    std::size_t max_scales = 0;
    unsigned threads = 0;
    bool allow_large = false;
    std::size_t large_threshold = 10u << 20;
    std::string format;
    std::string out_file;
    bool verbose = false;
};

struct LoadedInput {
    InputInfo info;
    Pattern pattern;
    std::vector<std::uint8_t> bytes;
};

void add_input_options(CLI::App& cmd, InputOptions& o, bool with_scales) {
    cmd.add_option("input", o.path, "Input file (raw bytes)");
    cmd.add_option("--fixture", o.fixture, "Use an embedded example pattern (X_A..X_I, T3a, T3b)");
    cmd.add_option("--generate", o.generated, "Use a generated signal: periodic|noisy-periodic|random|english");
    cmd.add_option("--length", o.generated_length, "Length of the generated signal (bits or characters)");
    cmd.add_option("--seed", o.seed, "Seed for --generate");
    cmd.add_option("--symbol", o.symbol, "Symbolization: bit|byte|utf8-char|token:W");
    cmd.add_option("--newline", o.newline, "Newline policy: keep|strip|lf");
    cmd.add_option("--declared-alphabet", o.declared_alphabet, "Alphabet size K (>= observed distinct symbols)");
    cmd.add_option("--out", o.out_file, "Write output to FILE instead of stdout");
    cmd.add_flag("--verbose", o.verbose, "Include version and kernel provenance");
    cmd.add_option("--threads", o.threads, "Worker threads for the scale scan (0 = all cores)");
    if (with_scales) {
        cmd.add_option("--max-scales", o.max_scales, "Evaluate at most M log-spaced scales (0 = all)");
        cmd.add_flag("--allow-large", o.allow_large, "Permit full spectra of inputs above the size guard");
        cmd.add_option("--large-threshold", o.large_threshold, "Size guard in bytes (default 10 MiB)");
    }
}

LoadedInput load_input(const InputOptions& o, std::ostream& err) {
    const int sources = !o.path.empty() + !o.fixture.empty() + !o.generated.empty();
    if (sources != 1) {
        throw InvalidArgument("give exactly one of INPUT, --fixture or --generate");
    }
    LoadedInput in;
    SymbolizationPolicy policy;
    bool policy_set = false;
    if (!o.symbol.empty()) {
        policy = parse_symbol_mode(o.symbol);
        policy_set = true;
    }

    if (!o.fixture.empty()) {
        const auto& f = corpus::find_fixture(o.fixture);
        in.bytes = corpus::fixture_bytes(f);
        in.info.descriptor = "fixture:" + std::string(f.id);
        if (!policy_set) {
            policy = f.policy;
            if (f.unit == corpus::Unit::bit) {
                policy.mode = SymbolMode::bit;
            }
        }
    } else if (!o.generated.empty()) {
        std::ostringstream d;
        d << "generated:" << o.generated << ":length=" << o.generated_length << ":seed=" << o.seed;
        in.info.descriptor = d.str();
        if (o.generated == "english") {
            const auto text = corpus::english_like_text(o.generated_length, o.seed);
            in.bytes.assign(text.begin(), text.end());
            if (!policy_set) {
                policy.mode = SymbolMode::utf8_char;
            }
        } else {
            if (o.generated_length % 8 != 0) {
                throw InvalidArgument("generated binary signals need a length divisible by 8");
            }
            const auto signals = corpus::binary_signals(o.generated_length, o.seed);
            const Pattern* p = nullptr;
            if (o.generated == "periodic") {
                p = &signals.periodic;
            } else if (o.generated == "noisy-periodic") {
                p = &signals.noisy_periodic;
            } else if (o.generated == "random") {
                p = &signals.random;
            } else {
                throw InvalidArgument("unknown signal '" + o.generated + "' (periodic|noisy-periodic|random|english)");
            }
            in.bytes = to_bytes(*p, SymbolMode::bit);
            if (!policy_set) {
                policy.mode = SymbolMode::bit;
            }
        }
    } else {
        in.bytes = read_file(o.path);
        in.info.descriptor = o.path;
        if (!policy_set) {
            err << "warning: --symbol not given; defaulting to byte symbols\n";
        }
    }
    if (!o.newline.empty()) {
        policy.newline = parse_newline(o.newline);
    }
    if (o.declared_alphabet != 0) {
        policy.declared_alphabet = o.declared_alphabet;
    }

    auto report = ingest_bytes(in.bytes, policy);
    in.pattern = std::move(report.pattern);
    in.info.source_bytes = report.source_bytes;
    in.info.newline_bytes_removed = report.newline_bytes_removed;
    in.info.dropped_symbols = report.dropped_symbols;
    in.info.policy = report.policy;
    if (report.dropped_symbols != 0) {
        err << "warning: dropped " << report.dropped_symbols << " trailing byte(s) that do not fill a token\n";
    }
    return in;
}

void guard_size(const InputOptions& o, const LoadedInput& in) {
    if (in.bytes.size() > o.large_threshold && !o.allow_large && o.max_scales == 0) {
        throw InvalidArgument("input is " + std::to_string(in.bytes.size()) + " bytes, above the " +
                              std::to_string(o.large_threshold) +
                              "-byte guard; full spectra are quadratic in symbol reads. Pass --allow-large or "
                              "--max-scales M");
    }
}

MeasureOptions measure_options(const InputOptions& o, const LoadedInput& in) {
    MeasureOptions m;
    m.declared_alphabet = in.info.policy.declared_alphabet;
    m.spectrum.max_scales = o.max_scales;
    m.spectrum.threads = o.threads;
    return m;
}

std::optional<Provenance> provenance(const InputOptions& o) {
    if (!o.verbose) {
        return std::nullopt;
    }
    return Provenance{kVersion, std::string(kernels::to_string(kernels::active().isa))};
}

void emit(const InputOptions& o, const std::string& text, std::ostream& out) {
    if (o.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_file, std::ios::binary);
    f << text;
    if (!f) {
        throw IoError("cannot write " + o.out_file);
    }
}

void emit_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes, std::ostream& out) {
    if (path.empty() || path == "-") {
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw IoError("cannot write " + path);
    }
}

std::vector<SpectrumKind> parse_kinds(const std::string& text) {
    std::vector<SpectrumKind> kinds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "raw") {
            kinds.push_back(SpectrumKind::raw);
        } else if (item == "maximal" || item == "max") {
            kinds.push_back(SpectrumKind::maximal);
        } else if (item == "normalized" || item == "norm") {
            kinds.push_back(SpectrumKind::normalized);
        } else {
            throw InvalidArgument("unknown spectrum kind '" + item + "' (raw|maximal|normalized)");
        }
    }
    return kinds;
}

std::vector<Spectrum> select(const SpectrumSet& set, const std::vector<SpectrumKind>& kinds) {
    std::vector<Spectrum> out;
    for (SpectrumKind k : kinds) {
        out.push_back(k == SpectrumKind::raw ? set.raw : (k == SpectrumKind::maximal ? set.maximal : set.normalized));
    }
    return out;
}

std::string check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) {
            return format;
        }
    }
    throw InvalidArgument("unsupported --format '" + format + "'");
}

int cmd_analyze(const InputOptions& o, bool with_spectrum, const std::string& kinds_text, std::ostream& out,
                std::ostream& err) {
    const std::string format = check_format(o.format.empty() ? "json" : o.format, {"json", "csv"});
    const auto in = load_input(o, err);
    guard_size(o, in);
    const auto options = measure_options(o, in);
    const auto set = spectra(in.pattern, options.declared_alphabet, options.spectrum);

    OutputRecord record;
    record.input = in.info;
    record.measures = measure(in.pattern, set);
    if (with_spectrum) {
        record.spectra = select(set, parse_kinds(kinds_text));
    }
    record.provenance = provenance(o);
    emit(o, format == "json" ? to_json(record).dump(2) + "\n" : to_csv(record), out);
    return kExitOk;
}

int cmd_spectrum(const InputOptions& o, const std::string& kinds_text, bool timing, const std::string& timing_out,
                 std::ostream& out, std::ostream& err) {
    const std::string format = check_format(o.format.empty() ? "csv" : o.format, {"json", "csv"});
    const auto kinds = parse_kinds(kinds_text);
    const auto in = load_input(o, err);
    guard_size(o, in);
    if (in.pattern.size() < 2) {
        throw InvalidArgument("spectrum needs at least 2 symbols, input has " + std::to_string(in.pattern.size()));
    }
    if (in.pattern.alphabet().size() < 2) {
        throw InvalidArgument("spectrum is degenerate: the input uses a single symbol, so every scale is 0 bits");
    }
    auto options = measure_options(o, in);
    options.spectrum.collect_timing = timing || !timing_out.empty();
    const auto set = spectra(in.pattern, options.declared_alphabet, options.spectrum);
    const auto selected = select(set, kinds);
    emit(o, format == "csv" ? spectrum_csv(selected) : spectrum_json(in.info, selected, provenance(o)).dump(2) + "\n",
         out);
    if (timing) {
        err << stats_csv(set.stats);
    }
    if (!timing_out.empty()) {
        std::ofstream f(timing_out);
        f << stats_csv(set.stats);
        if (!f) {
            throw IoError("cannot write " + timing_out);
        }
    }
    return kExitOk;
}

int cmd_compare(const InputOptions& o, const std::string& backends_text, const std::string& config_path,
                std::ostream& out, std::ostream& err) {
    const std::string format = check_format(o.format.empty() ? "table" : o.format, {"table", "json", "csv"});
    const auto in = load_input(o, err);
    guard_size(o, in);

    auto config = baselines::default_config();
    if (!config_path.empty()) {
        baselines::load_config_file(config_path, config);
    }
    baselines::apply_environment(config);

    std::vector<baselines::BackendId> ids;
    std::stringstream ss(backends_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            ids.push_back(baselines::parse_backend_id(item));
        }
    }
    std::vector<std::unique_ptr<baselines::Compressor>> owned;
    std::vector<const baselines::Compressor*> backends;
    for (auto id : ids) {
        owned.push_back(baselines::make_backend(id, config));
        backends.push_back(owned.back().get());
    }
    const auto report = baselines::compare(in.pattern, in.bytes, backends, measure_options(o, in));

    if (format == "table") {
        emit(o, comparison_table(in.info, report), out);
    } else {
        OutputRecord record;
        record.input = in.info;
        record.measures = report.measures;
        record.compression = report.backends;
        record.overhead_dominated = report.overhead_dominated;
        record.provenance = provenance(o);
        emit(o, format == "json" ? to_json(record).dump(2) + "\n" : to_csv(record), out);
    }
    for (const auto& b : report.backends) {
        if (!b.result && o.verbose && !b.transcript.empty()) {
            err << b.transcript;
        }
    }
    return kExitOk;
}

int cmd_demo_sensitivity(const std::string& format_in, std::ostream& out) {
    const std::string format = check_format(format_in.empty() ? "table" : format_in, {"table", "json"});
    struct Row {
        std::string id;
        std::string text;
        double computed;
        double without_spaces;
        std::int64_t reported;
    };
    std::vector<Row> rows;
    for (const char* id : {"T3a", "T3b"}) {
        const auto& f = corpus::find_fixture(id);
        std::string squeezed;
        for (char c : f.content) {
            if (c != ' ') {
                squeezed.push_back(c);
            }
        }
        rows.push_back(Row{std::string(f.id), std::string(f.content), ssm_information(corpus::fixture(id)).bits,
                           ssm_information(Pattern::from_chars(squeezed)).bits, *f.expected.i_ssm});
    }
    const double ratio = rows[1].computed / rows[0].computed;
    const double ratio_squeezed = rows[1].without_spaces / rows[0].without_spaces;
    const double ratio_reported = static_cast<double>(rows[1].reported) / static_cast<double>(rows[0].reported);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = kSchemaVersion;
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            list.push_back({{"id", r.id},
                            {"pattern", r.text},
                            {"i_ssm", {{"bits", round_bits(r.computed)}, {"value_bits_exact", r.computed}}},
                            {"i_ssm_without_spaces",
                             {{"bits", round_bits(r.without_spaces)}, {"value_bits_exact", r.without_spaces}}},
                            {"i_ssm_reported", r.reported}});
        }
        j["rows"] = list;
        j["ratio"] = ratio;
        j["ratio_without_spaces"] = ratio_squeezed;
        j["ratio_reported"] = ratio_reported;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    std::ostringstream t;
    t << "One-element change sensitivity of I_SSM [bits]\n\n";
    t << std::left << std::setw(32) << "pattern" << std::right << std::setw(10) << "computed" << std::setw(10)
      << "reported" << std::setw(16) << "without spaces" << "\n";
    for (const auto& r : rows) {
        t << std::left << std::setw(32) << r.text << std::right << std::setw(10) << round_bits(r.computed)
          << std::setw(10) << r.reported << std::setw(16) << round_bits(r.without_spaces) << "\n";
    }
    t << std::left << std::setw(32) << "ratio" << std::right << std::fixed << std::setprecision(2) << std::setw(10)
      << ratio << std::setw(10) << ratio_reported << std::setw(16) << ratio_squeezed << "\n";
    out << t.str();
    return kExitOk;
}

int cmd_fixtures(std::ostream& out) {
    out << "id,unit,printed_length,i_max,i_shannon,i_ssm,description\n";
    auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& f : corpus::fixtures()) {
        out << f.id << ',' << (f.unit == corpus::Unit::bit ? "bit" : "character") << ',' << f.printed_length << ','
            << opt(f.expected.i_max) << ',' << opt(f.expected.i_shannon) << ',' << opt(f.expected.i_ssm) << ','
            << csv_escape(std::string(f.description)) << '\n';
    }
    return kExitOk;
}

struct GenerateOptions {
    std::string kind = "uniform-random";
    std::string alphabet = "01";
    std::string period;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    double error_rate = 0.0;
    bool pack_bits = false;
    std::string out_file;
};

int cmd_generate(const GenerateOptions& g, std::ostream& out) {
    corpus::GeneratorSpec spec;
    if (g.kind == "uniform-random") {
        spec.kind = corpus::GeneratorKind::uniform_random;
    } else if (g.kind == "repeat") {
        spec.kind = corpus::GeneratorKind::repeat;
    } else if (g.kind == "repeat-with-errors") {
        spec.kind = corpus::GeneratorKind::repeat_with_errors;
    } else if (g.kind == "ramp") {
        spec.kind = corpus::GeneratorKind::ramp;
    } else {
        throw InvalidArgument("unknown generator kind '" + g.kind + "'");
    }
    spec.alphabet = corpus::symbols_of(g.alphabet);
    spec.period = corpus::symbols_of(g.period);
    spec.length = g.length;
    spec.seed = g.seed;
    spec.error_rate = g.error_rate;
    const Pattern p = corpus::generate(spec);
    emit_bytes(g.out_file, to_bytes(p, g.pack_bits ? SymbolMode::bit : SymbolMode::byte), out);
    return kExitOk;
}

int cmd_kernels(std::ostream& out) {
    out << "active: " << kernels::to_string(kernels::active().isa) << "\navailable:";
    for (auto isa : kernels::available()) {
        out << ' ' << kernels::to_string(isa);
    }
    out << "\n";
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"infometer: multi-scale Shannon information content of discrete patterns"};
    app.name(args.empty() ? "infometer" : args.front());
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    InputOptions analyze_opts;
    bool with_spectrum = false;
    std::string analyze_kinds = "raw,maximal,normalized";
    auto* analyze = app.add_subcommand("analyze", "Measure I_MAX, I_S and I_SSM of one input");
    add_input_options(*analyze, analyze_opts, true);
    analyze->add_option("--format", analyze_opts.format, "json (default) or csv");
    analyze->add_flag("--with-spectrum", with_spectrum, "Include the spectra in the record");
    analyze->add_option("--kinds", analyze_kinds, "Spectra for --with-spectrum: raw,maximal,normalized");

    InputOptions spectrum_opts;
    std::string spectrum_kinds = "raw,maximal,normalized";
    bool timing = false;
    std::string timing_out;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Dump spectra as long-form plot data");
    add_input_options(*spectrum_cmd, spectrum_opts, true);
    spectrum_cmd->add_option("--format", spectrum_opts.format, "csv (default) or json");
    spectrum_cmd->add_option("--kinds", spectrum_kinds, "Comma list of raw,maximal,normalized");
    spectrum_cmd->add_flag("--timing", timing, "Print per-scale work counts and timings to stderr");
    spectrum_cmd->add_option("--timing-out", timing_out, "Write per-scale work counts and timings to FILE");

    InputOptions compare_opts;
    std::string backends = "zip,7z,zpaq";
    std::string config_path;
    auto* compare_cmd = app.add_subcommand("compare", "Compare I_SSM with compression baselines");
    add_input_options(*compare_cmd, compare_opts, true);
    compare_cmd->add_option("--format", compare_opts.format, "table (default), json or csv");
    compare_cmd->add_option("--backends", backends, "Comma list of zip,7z,zpaq,custom");
    compare_cmd->add_option("--config", config_path, "Backend command config (key=value)");

    std::string demo_format;
    auto* demo = app.add_subcommand("demo-sensitivity", "Show how one changed element inflates I_SSM");
    demo->add_option("--format", demo_format, "table (default) or json");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "List the embedded example patterns");

    std::string export_id;
    std::string export_out;
    auto* export_cmd = app.add_subcommand("export-fixture", "Write a fixture's bytes (bit fixtures packed MSB-first)");
    export_cmd->add_option("id", export_id, "Fixture id")->required();
    export_cmd->add_option("--out", export_out, "Output file (default stdout)");

    GenerateOptions gen;
    auto* generate_cmd = app.add_subcommand("generate", "Write a seeded synthetic pattern");
    generate_cmd->add_option("--kind", gen.kind, "uniform-random|repeat|repeat-with-errors|ramp");
    generate_cmd->add_option("--alphabet", gen.alphabet, "Symbols, one character each");
    generate_cmd->add_option("--period", gen.period, "Repeating section for repeat kinds");
    generate_cmd->add_option("--length", gen.length, "Number of symbols")->required();
    generate_cmd->add_option("--seed", gen.seed, "RNG seed");
    generate_cmd->add_option("--error-rate", gen.error_rate, "Substituted fraction for repeat-with-errors");
    generate_cmd->add_flag("--pack-bits", gen.pack_bits, "Pack 0/1 symbols into bytes MSB-first");
    generate_cmd->add_option("--out", gen.out_file, "Output file (default stdout)");

    auto* kernels_cmd = app.add_subcommand("kernels", "Show the selected SIMD kernel variant");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) {
        argv.push_back("infometer");
    }
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) {
            return cmd_analyze(analyze_opts, with_spectrum, analyze_kinds, out, err);
        }
        if (*spectrum_cmd) {
            return cmd_spectrum(spectrum_opts, spectrum_kinds, timing, timing_out, out, err);
        }
        if (*compare_cmd) {
            return cmd_compare(compare_opts, backends, config_path, out, err);
        }
        if (*demo) {
            return cmd_demo_sensitivity(demo_format, out);
        }
        if (*fixtures_cmd) {
            return cmd_fixtures(out);
        }
        if (*export_cmd) {
            emit_bytes(export_out, corpus::fixture_bytes(corpus::find_fixture(export_id)), out);
            return kExitOk;
        }
        if (*generate_cmd) {
            return cmd_generate(gen, out);
        }
        if (*kernels_cmd) {
            return cmd_kernels(out);
        }
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace infometer::cli
