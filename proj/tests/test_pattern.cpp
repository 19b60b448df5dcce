#include <doctest.h>

#include "infometer/error.hpp"
#include "infometer/pattern.hpp"

using namespace infometer;

namespace {

std::vector<std::string> texts(const Pattern& x, std::size_t r) {
    const auto p = partition(x, r);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::string s;
        for (SymbolId id : p[i].ids()) {
            s += x.alphabet()[id].bytes;
        }
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("alphabet is sorted and unique") {
    const auto p = Pattern::from_chars("banana");
    REQUIRE(p.alphabet().size() == 3);
    CHECK(p.alphabet()[0].bytes == "a");
    CHECK(p.alphabet()[2].bytes == "n");
    CHECK(p.alphabet().find(Symbol{"z"}) == p.alphabet().size());
    CHECK(p.at(0).bytes == "b");
}

TEST_CASE("partition drops the tail") {
    CHECK(texts(Pattern::from_chars("abcdef"), 2) == std::vector<std::string>{"ab", "cd", "ef"});
    const auto x = Pattern::from_chars("abcde");
    CHECK(texts(x, 2) == std::vector<std::string>{"ab", "cd"});
    CHECK(partition(x, 2).dropped() == 1);
    CHECK(partition(x, 5).size() == 1);
}

TEST_CASE("X_C at r=16 gives three identical blocks") {
    const auto x = Pattern::from_chars("111111110000000011111111000000001111111100000000");
    const auto p = partition(x, 16);
    const auto t = texts(x, 16);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == "1111111100000000");
    CHECK(t[0] == t[1]);
    CHECK(p[1] == p[2]);
}

TEST_CASE("invalid scales") {
    const auto p = Pattern::from_chars("abc");
    CHECK_THROWS_AS(partition(p, 0), InvalidScale);
    CHECK_THROWS_AS(partition(p, 4), InvalidScale);
}

TEST_CASE("block symbols are injective across lengths") {
    const std::vector<Symbol> syms{Symbol{"ab"}, Symbol{"c"}, Symbol{"a"}, Symbol{"bc"}};
    const auto p = Pattern::from_symbols(syms);
    const auto q = partition(p, 2);
    CHECK_FALSE(q[0].as_symbol() == q[1].as_symbol());
    CHECK_FALSE(q[0] == q[1]);
}

TEST_CASE("concatenation merges alphabets") {
    const auto a = Pattern::from_chars("ab");
    const auto b = Pattern::from_chars("cb");
    const auto c = a + b;
    CHECK(c == Pattern::from_chars("abcb"));
    CHECK(c.alphabet().size() == 3);
    CHECK(c.reversed() == Pattern::from_chars("bcba"));
    CHECK(c.slice(1, 2) == Pattern::from_chars("bc"));
}

TEST_CASE("from_ids compacts unused alphabet entries") {
    const auto alpha = Alphabet::from_symbols({Symbol{"x"}, Symbol{"y"}, Symbol{"z"}});
    const std::vector<SymbolId> ids{2, 0, 2};
    const auto p = Pattern::from_ids(alpha, ids);
    CHECK(p.alphabet().size() == 2);
    CHECK(p == Pattern::from_chars("zxz"));
    const std::vector<SymbolId> bad{3};
    CHECK_THROWS_AS(Pattern::from_ids(alpha, bad), InvalidArgument);
}
