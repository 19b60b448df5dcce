#include <doctest.h>

#include "infometer/corpus.hpp"
#include "infometer/error.hpp"
#include "infometer/measures.hpp"

using namespace infometer;

TEST_CASE("fixture lookup") {
    CHECK(corpus::find_fixture("XA").id == "X_A");
    CHECK(corpus::find_fixture("x_d").id == "X_D");
    CHECK(corpus::find_fixture("t3b").id == "T3b");
    CHECK_THROWS_AS(corpus::find_fixture("X_Z"), InvalidArgument);
    CHECK(corpus::fixtures().size() == 11);
}

TEST_CASE("printed lengths") {
    for (const auto& f : corpus::fixtures()) {
        std::size_t n = 0;
        for (char c : f.content) {
            n += c != '\n';
        }
        CHECK(n == f.printed_length);
    }
}

TEST_CASE("generators are deterministic") {
    corpus::GeneratorSpec s;
    s.alphabet = corpus::symbols_of("acgt");
    s.length = 500;
    s.seed = 42;
    CHECK(corpus::generate(s) == corpus::generate(s));
    auto t = s;
    t.seed = 43;
    CHECK_FALSE(corpus::generate(s) == corpus::generate(t));
    const auto p = corpus::generate(s);
    for (const auto& sym : p.alphabet().symbols()) {
        CHECK(std::string("acgt").find(sym.bytes) != std::string::npos);
    }
    CHECK(corpus::english_like_text(300, 9) == corpus::english_like_text(300, 9));
    CHECK(corpus::english_like_text(300, 9).size() == 300);
}

TEST_CASE("one substitution") {
    corpus::GeneratorSpec s;
    s.kind = corpus::GeneratorKind::repeat;
    s.alphabet = corpus::symbols_of("0123456789");
    s.period = corpus::symbols_of("123456789");
    s.length = 27;
    const auto clean = corpus::generate(s);
    s.kind = corpus::GeneratorKind::repeat_with_errors;
    s.error_rate = 1.0 / 27;
    s.seed = 4;
    const auto noisy = corpus::generate(s);
    CHECK(corpus::hamming_distance(clean, noisy) == 1);
}

TEST_CASE("ramp and invalid specs") {
    corpus::GeneratorSpec s;
    s.kind = corpus::GeneratorKind::ramp;
    s.alphabet = corpus::symbols_of("ab");
    s.length = 4;
    CHECK(corpus::generate(s) == Pattern::from_chars("aabb"));
    s.alphabet.clear();
    CHECK_THROWS_AS(corpus::generate(s), InvalidArgument);
}

TEST_CASE("binary signals") {
    const auto sig = corpus::binary_signals(8000, 1);
    CHECK(sig.periodic.size() == 8000);
    CHECK(sig.noisy_periodic.size() == 8000);
    CHECK(sig.random.size() == 8000);
    CHECK(corpus::hamming_distance(sig.periodic, sig.noisy_periodic) == 80);
}
