#include <doctest.h>

#include <cmath>

#include "infometer/corpus.hpp"
#include "infometer/error.hpp"
#include "infometer/measures.hpp"
#include "infometer/spectrum.hpp"
#include "oracle.hpp"

using namespace infometer;

TEST_CASE("raw spectrum of X_C and X_B") {
    const auto c = spectrum(corpus::fixture("X_C"));
    REQUIRE(c.size() == 24);
    CHECK(c.at(8) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(c.at(4) == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(spectrum(corpus::fixture("X_B")).at(2) == 0.0);
    CHECK_THROWS_AS(c.at(25), InvalidScale);
    CHECK(spectrum(Pattern::from_chars("a")).empty());
}

TEST_CASE("maximal spectrum") {
    CHECK(max_spectrum_value(48, 2, 4) == doctest::Approx(12 * std::log2(12.0)));
    CHECK(max_spectrum_value(48, 2, 1) == 48.0);
    CHECK(max_spectrum_value(48, 2, 24) == 2.0);
    // k^r far beyond any integer type
    CHECK(max_spectrum_value(1000000, 1000, 400) == doctest::Approx(2500 * std::log2(2500.0)));
    const auto m = max_spectrum(101, 12);
    CHECK(m.at(50) == 2.0);
}

TEST_CASE("normalized spectrum") {
    const auto c = normalized_spectrum(corpus::fixture("X_C"));
    CHECK(c.at(4) == doctest::Approx(13.389).epsilon(1e-4));
    const auto b = normalized_spectrum(corpus::fixture("X_B"));
    CHECK(b.at(2) == 2.0);
    const auto k = normalized_spectrum(Pattern::from_chars("aaaaaa"));
    for (double v : k.bits) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("spectra match the oracle on the fixtures") {
    for (const auto& f : corpus::fixtures()) {
        const Pattern p = corpus::fixture(f.id);
        oracle::Seq seq;
        for (std::size_t i = 0; i < p.size(); ++i) {
            seq.push_back(p.at(i).bytes);
        }
        const auto set = spectra(p);
        REQUIRE(set.raw.size() == p.size() / 2);
        for (std::size_t i = 0; i < set.raw.size(); ++i) {
            const std::size_t r = set.raw.scales[i];
            CHECK(set.raw.bits[i] == doctest::Approx(oracle::i_sp(seq, r)).epsilon(1e-12));
            CHECK(set.maximal.bits[i] == doctest::Approx(oracle::i_sms(seq.size(), set.k, r)).epsilon(1e-12));
            CHECK(set.normalized.bits[i] == doctest::Approx(oracle::i_sns(seq, r)).epsilon(1e-12));
        }
    }
}

TEST_CASE("raw spectrum never exceeds the maximal spectrum") {
    for (const auto& f : corpus::fixtures()) {
        const auto set = spectra(corpus::fixture(f.id));
        for (std::size_t i = 0; i < set.raw.size(); ++i) {
            if (set.distinct_blocks[i] >= 2) {
                CHECK(set.raw.bits[i] <= set.maximal.bits[i] + 1e-9);
            }
        }
    }
}

TEST_CASE("scale subsampling keeps the ends") {
    SpectrumOptions o;
    o.max_scales = 10;
    const auto s = spectrum_scales(100000, o);
    CHECK(s.size() <= 10);
    CHECK(s.front() == 1);
    CHECK(s.back() == 50000);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(spectrum_scales(48).size() == 24);

    MeasureOptions m;
    m.spectrum.max_scales = 4;
    const auto r = measure(corpus::fixture("X_D"), m);
    CHECK(r.scales_subsampled);
}

TEST_CASE("statistics follow N/r") {
    const auto set = spectra(corpus::fixture("X_H"));
    REQUIRE(set.stats.size() == set.raw.size());
    for (const auto& s : set.stats) {
        CHECK(s.blocks == set.n / s.scale);
        CHECK(s.probes >= s.blocks);
        CHECK(s.distinct <= s.blocks);
    }
}

TEST_CASE("thread count does not change results") {
    const auto p = corpus::binary_signals(4000, 7).noisy_periodic;
    SpectrumOptions one;
    one.threads = 1;
    SpectrumOptions four;
    four.threads = 4;
    const auto a = spectra(p, std::nullopt, one);
    const auto b = spectra(p, std::nullopt, four);
    CHECK(a.raw.bits == b.raw.bits);
    CHECK(a.normalized.bits == b.normalized.bits);
    CHECK(a.distinct_blocks == b.distinct_blocks);
}
