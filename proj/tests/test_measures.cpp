#include <doctest.h>

#include <cmath>

#include "infometer/corpus.hpp"
#include "infometer/error.hpp"
#include "infometer/measures.hpp"

using namespace infometer;

TEST_CASE("frequencies of X_A") {
    const auto t = frequencies(corpus::fixture("X_A"));
    CHECK(t.total == 48);
    CHECK(t.counts.at(Symbol{"0"}) == 30);
    CHECK(t.counts.at(Symbol{"1"}) == 18);
    CHECK(t.probability(Symbol{"1"}) == doctest::Approx(0.375));
    CHECK(t.probability(Symbol{"2"}) == 0.0);
}

TEST_CASE("frequency conservation") {
    for (const auto& f : corpus::fixtures()) {
        const auto t = frequencies(corpus::fixture(f.id));
        std::size_t sum = 0;
        for (const auto& [s, c] : t.counts) {
            sum += c;
        }
        CHECK(sum == t.total);
    }
}

TEST_CASE("shannon information") {
    CHECK(shannon_information(Pattern::from_chars("")) == 0.0);
    CHECK(shannon_information(Pattern::from_chars("aaaa")) == 0.0);
    CHECK(shannon_information(Pattern::from_chars("ab")) == doctest::Approx(2.0));
    CHECK(shannon_information(corpus::fixture("X_A")) ==
          doctest::Approx(30 * std::log2(48.0 / 30) + 18 * std::log2(48.0 / 18)).epsilon(1e-12));
    const std::vector<std::size_t> counts{30, 18};
    CHECK(shannon_information(counts) == shannon_information(corpus::fixture("X_A")));
}

TEST_CASE("maximum information") {
    CHECK(max_information(48, 2) == 48.0);
    CHECK(max_information(0, 5) == 0.0);
    CHECK(max_information(10, 1) == 0.0);
    CHECK(max_information(101, 12) == doctest::Approx(101 * std::log2(12.0)));
    CHECK(relative_information(1.0, 0.0) == 0.0);
}

TEST_CASE("rounding is half-up") {
    CHECK(round_bits(12.5) == 13);
    CHECK(round_bits(12.4999) == 12);
    CHECK(round_bits(57.7) == 58);
    CHECK(round_bits(0.0) == 0);
}

TEST_CASE("ssm of small patterns") {
    CHECK(ssm_information(Pattern::from_chars("0000")).bits == 0.0);
    CHECK(ssm_information(Pattern::from_chars("0")).bits == 0.0);
    CHECK(ssm_information(Pattern::from_chars("")).argmin_scale == 0);
    const auto b = ssm_information(corpus::fixture("X_B"));
    CHECK(b.bits == 2.0);
    CHECK(b.argmin_scale == 2);
    const auto c = ssm_information(corpus::fixture("X_C"));
    CHECK(c.bits == doctest::Approx(13.389).epsilon(1e-4));
    CHECK(c.argmin_scale == 4);
}

TEST_CASE("measure reports") {
    const auto a = measure(corpus::fixture("X_A"));
    CHECK(a.n == 48);
    CHECK(a.k == 2);
    CHECK(round_bits(a.i_max) == 48);
    CHECK(round_bits(a.i_shannon) == 46);
    CHECK(round_bits(a.i_ssm) == 40);
    CHECK(a.argmin_scale == 5);

    const auto e = measure(corpus::fixture("X_E"));
    CHECK(e.k == 13);
    CHECK(round_bits(e.i_max) == 374);
    CHECK(round_bits(e.i_shannon) == 347);
    CHECK(round_bits(e.i_ssm) == 116);

    const auto empty = measure(Pattern::from_chars(""));
    CHECK(empty.n == 0);
    CHECK(empty.i_max == 0.0);
    CHECK(empty.i_ssm == 0.0);
}

TEST_CASE("declared alphabet") {
    MeasureOptions o;
    o.declared_alphabet = 4;
    const auto r = measure(corpus::fixture("X_A"), o);
    CHECK(r.k == 4);
    CHECK(r.i_max == 96.0);
    CHECK(r.i_ssm <= r.i_shannon);
    o.declared_alphabet = 1;
    CHECK_THROWS_AS(measure(corpus::fixture("X_A"), o), InvalidArgument);
}
