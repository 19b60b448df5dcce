#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "infometer/cli.hpp"

using namespace infometer;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "infometer");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string csv_value(const std::string& csv, const std::string& key) {
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        const std::string prefix = "measures," + key + ",,,";
        if (line.rfind(prefix, 0) == 0) {
            return line.substr(prefix.size());
        }
    }
    return {};
}

} // namespace

TEST_CASE("analyze json") {
    const auto r = run({"analyze", "--fixture", "X_A"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["measures"]["n"] == 48);
    CHECK(j["measures"]["i_max"]["bits"] == 48);
    CHECK(j["measures"]["i_shannon"]["bits"] == 46);
    CHECK(j["measures"]["i_ssm"]["bits"] == 40);
    CHECK(j["measures"]["argmin_scale"] == 5);
    CHECK(j["policy"]["symbol"] == "bit");
    CHECK_FALSE(j.contains("provenance"));
}

TEST_CASE("json and csv carry the same numbers") {
    const auto j = nlohmann::json::parse(run({"analyze", "--fixture", "X_E"}).out);
    const auto csv = run({"analyze", "--fixture", "X_E", "--format", "csv"}).out;
    for (const char* key : {"i_max", "i_shannon", "i_ssm"}) {
        CHECK(csv_value(csv, std::string(key) + ".bits") == std::to_string(j["measures"][key]["bits"].get<long>()));
        CHECK(std::stod(csv_value(csv, std::string(key) + ".value_bits_exact")) ==
              j["measures"][key]["value_bits_exact"].get<double>());
    }
    CHECK(csv_value(csv, "argmin_scale") == "17");
}

TEST_CASE("output is deterministic") {
    for (const char* cmd : {"analyze", "spectrum"}) {
        CHECK(run({cmd, "--fixture", "X_H"}).out == run({cmd, "--fixture", "X_H"}).out);
    }
}

TEST_CASE("spectrum csv") {
    const auto r = run({"spectrum", "--fixture", "X_B", "--kinds", "normalized"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("scale,kind,bits,argmin\n", 0) == 0);
    CHECK(r.out.find("\n2,normalized,2,1\n") != std::string::npos);
    const auto t = run({"spectrum", "--fixture", "X_B", "--timing"});
    CHECK(t.err.find("scale,blocks,distinct") != std::string::npos);
}

TEST_CASE("files default to byte symbols with a warning") {
    const auto path = std::filesystem::temp_directory_path() / "infometer_cli_test.txt";
    {
        std::ofstream f(path, std::ios::binary);
        f << "abababab";
    }
    const auto r = run({"analyze", path.string()});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(nlohmann::json::parse(r.out)["measures"]["i_ssm"]["value_bits_exact"] == 2.0);
    const auto b = run({"analyze", path.string(), "--symbol", "bit"});
    CHECK(nlohmann::json::parse(b.out)["measures"]["n"] == 64);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"analyze"}).code == cli::kExitUsage);
    CHECK(run({"analyze", "--fixture", "X_A", "--fixture-typo"}).code == cli::kExitUsage);
    CHECK(run({"analyze", "/nonexistent/infometer/input"}).code == cli::kExitUsage);
    CHECK(run({"analyze", "--fixture", "nope"}).code == cli::kExitUsage);
    CHECK(run({"analyze", "--fixture", "X_A", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run({"analyze", "--fixture", "X_A", "--declared-alphabet", "1"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
    CHECK(run({"--version"}).out.find(cli::kVersion) != std::string::npos);

    const auto path = std::filesystem::temp_directory_path() / "infometer_cli_bad.txt";
    {
        std::ofstream f(path, std::ios::binary);
        f << "ok\xFF";
    }
    const auto bad = run({"analyze", path.string(), "--symbol", "utf8-char"});
    CHECK(bad.code == cli::kExitUsage);
    CHECK(bad.err.find("offset 2") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("degenerate spectrum input") {
    const auto path = std::filesystem::temp_directory_path() / "infometer_cli_const.txt";
    {
        std::ofstream f(path, std::ios::binary);
        f << "aaaaaaaa";
    }
    CHECK(run({"spectrum", path.string(), "--symbol", "byte"}).code == cli::kExitUsage);
    const auto a = run({"analyze", path.string(), "--symbol", "byte"});
    CHECK(a.code == 0);
    CHECK(nlohmann::json::parse(a.out)["measures"]["i_ssm"]["bits"] == 0);
    std::filesystem::remove(path);
}

TEST_CASE("large input guard") {
    CHECK(run({"analyze", "--generate", "random", "--length", "8000", "--large-threshold", "100"}).code ==
          cli::kExitUsage);
    CHECK(run({"analyze", "--generate", "random", "--length", "8000", "--large-threshold", "100", "--allow-large"})
              .code == 0);
    const auto sub = run({"analyze", "--generate", "random", "--length", "8000", "--large-threshold", "100",
                          "--max-scales", "16"});
    CHECK(sub.code == 0);
    CHECK(nlohmann::json::parse(sub.out)["measures"]["scales_subsampled"] == true);
}

TEST_CASE("compare") {
    const auto r = run({"compare", "--fixture", "X_D", "--backends", "zip", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["overhead_dominated"] == true);
    CHECK(j["compression"][0]["backend"] == "zip-family");
    const auto t = run({"compare", "--generate", "noisy-periodic", "--length", "16000", "--backends", "zip"});
    CHECK(t.code == 0);
    CHECK(t.out.find("zip-family") != std::string::npos);
}

TEST_CASE("demo and listings") {
    const auto d = run({"demo-sensitivity", "--format", "json"});
    REQUIRE(d.code == 0);
    const auto j = nlohmann::json::parse(d.out);
    CHECK(j["rows"][0]["i_ssm_reported"] == 29);
    CHECK(j["rows"][1]["i_ssm_reported"] == 50);
    CHECK(j["ratio"].get<double>() >= 1.3);
    CHECK(run({"fixtures"}).out.find("X_I") != std::string::npos);
    CHECK(run({"kernels"}).out.find("scalar") != std::string::npos);
    CHECK(run({"export-fixture", "X_A"}).out.size() == 6);
    CHECK(run({"generate", "--kind", "repeat", "--period", "ab", "--alphabet", "ab", "--length", "5"}).out == "ababa");
}
