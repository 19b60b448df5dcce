#include <doctest.h>

#include <cstdlib>
#include <random>

#include "infometer/baselines.hpp"
#include "infometer/corpus.hpp"
#include "infometer/error.hpp"

using namespace infometer;
using namespace infometer::baselines;
using namespace std::chrono_literals;

namespace {

std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) {
        b = static_cast<std::uint8_t>(rng());
    }
    return out;
}

} // namespace

TEST_CASE("deflate sizes") {
    const DeflateCompressor z;
    const std::vector<std::uint8_t> same(1000, 'a');
    const auto r = z.compress(same);
    CHECK(r.input_bits == 8000);
    CHECK(r.output_bits < 200);
    CHECK(r.container_overhead_bits == 48);
    CHECK(r.version.find("zlib") != std::string::npos);

    const auto empty = z.compress({});
    CHECK(empty.input_bits == 0);
    CHECK(empty.ratio == 0.0);
    CHECK(empty.output_bits > 0);
    CHECK(empty.output_bits <= 128);

    const auto noise = random_bytes(20000, 1);
    CHECK(z.compress(noise).ratio > 0.95);

    auto twice = noise;
    twice.insert(twice.end(), noise.begin(), noise.end());
    CHECK(z.compress(twice).output_bits < 1.6 * static_cast<double>(z.compress(noise).output_bits));
}

TEST_CASE("backend ids") {
    CHECK(parse_backend_id("zip") == BackendId::zip_family);
    CHECK(parse_backend_id("7z-family") == BackendId::sevenz_family);
    CHECK(to_string(BackendId::zpaq_family) == "zpaq-family");
    CHECK_THROWS_AS(parse_backend_id("bzip"), InvalidArgument);
}

TEST_CASE("missing tools are skipped, not measured") {
    const ExternalCompressor c(BackendId::zpaq_family, {{"no-such-tool-infometer {input} {output}", ""}}, 5s);
    CHECK_FALSE(c.available());
    CHECK_THROWS_AS(compression_complexity(std::vector<std::uint8_t>{1, 2, 3}, c), BackendSkipped);
}

TEST_CASE("custom command through the shell") {
    if (!find_program("gzip")) {
        return;
    }
    const ExternalCompressor c(BackendId::custom_command, {{"gzip -9 -c {input} > {output}", "gzip --version"}}, 10s);
    REQUIRE(c.available());
    const std::vector<std::uint8_t> same(4000, 'x');
    const auto r = c.compress(same);
    CHECK(r.output_bits < 8 * 100);
    CHECK(r.version.find("gzip") != std::string::npos);

    const ExternalCompressor cat(BackendId::custom_command, {{"cat {input} > {output}", ""}}, 10s);
    CHECK(cat.compress(same).output_bits == 32000);
}

TEST_CASE("failing and slow commands") {
    const ExternalCompressor fails(BackendId::custom_command, {{"sh -c 'echo broken >&2; exit 3' {input} {output}", ""}},
                                   10s);
    try {
        fails.compress(std::vector<std::uint8_t>{1});
        FAIL("expected BackendSkipped");
    } catch (const BackendSkipped& e) {
        CHECK(e.transcript().find("broken") != std::string::npos);
    }
    const ExternalCompressor slow(BackendId::custom_command, {{"sleep 5; cat {input} > {output}", ""}}, 300ms);
    const auto start = std::chrono::steady_clock::now();
    CHECK_THROWS_AS(slow.compress(std::vector<std::uint8_t>{1}), BackendSkipped);
    CHECK(std::chrono::steady_clock::now() - start < 3s);
}

TEST_CASE("run_shell captures both streams") {
    const auto r = run_shell("echo out; echo err >&2; exit 4", 5s);
    CHECK(r.exit_code == 4);
    CHECK(r.out == "out\n");
    CHECK(r.err == "err\n");
    CHECK_FALSE(r.timed_out);
}

TEST_CASE("config text") {
    auto cfg = default_config();
    load_config_text("# comment\n7z.command = mytool a {output} {input}\ntimeout_seconds=7\ncustom.command=cat {input} > "
                     "{output}\n",
                     cfg);
    CHECK(cfg.timeout == 7000ms);
    REQUIRE(cfg.commands[BackendId::sevenz_family].size() == 1);
    CHECK(cfg.commands[BackendId::sevenz_family][0].command == "mytool a {output} {input}");
    CHECK(cfg.commands[BackendId::custom_command].size() == 1);
    CHECK_THROWS_AS(load_config_text("nonsense.key=1\n", cfg), InvalidArgument);
    CHECK_THROWS_AS(load_config_text("7z.command=no placeholders\n", cfg), InvalidArgument);
}

TEST_CASE("environment overrides") {
    auto cfg = default_config();
    ::setenv("INFOMETER_ZPAQ_CMD", "/opt/zpaq/zpaq", 1);
    apply_environment(cfg);
    ::unsetenv("INFOMETER_ZPAQ_CMD");
    REQUIRE(cfg.commands[BackendId::zpaq_family].size() == 1);
    CHECK(cfg.commands[BackendId::zpaq_family][0].command.rfind("/opt/zpaq/zpaq", 0) == 0);
}

TEST_CASE("comparison report") {
    const auto& f = corpus::find_fixture("X_B");
    const auto p = corpus::fixture("X_B");
    const auto bytes = corpus::fixture_bytes(f);
    DeflateCompressor z;
    const ExternalCompressor missing(BackendId::zpaq_family, {{"no-such-tool-infometer {input} {output}", ""}}, 1s);
    const std::vector<const Compressor*> backends{&missing, &z};
    const auto r = compare(p, bytes, backends);
    CHECK(r.overhead_dominated);
    CHECK(r.input_bits == 48);
    REQUIRE(r.backends.size() == 2);
    CHECK(r.backends[0].backend == BackendId::zip_family);
    CHECK(r.backends[0].result.has_value());
    CHECK_FALSE(r.backends[1].result.has_value());
    CHECK_FALSE(r.backends[1].skip_reason.empty());
    CHECK(r.measures.i_ssm == 2.0);
}
