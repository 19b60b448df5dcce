#include <algorithm>
#include <array>
#include <cctype>

#include "infometer/corpus.hpp"
#include "infometer/error.hpp"

namespace infometer::corpus {

namespace {

SymbolizationPolicy chars_policy(NewlinePolicy newline) {
    SymbolizationPolicy p;
    p.mode = SymbolMode::utf8_char;
    p.newline = newline;
    return p;
}

SymbolizationPolicy bit_text_policy() {
    SymbolizationPolicy p;
    p.mode = SymbolMode::byte;
    p.newline = NewlinePolicy::keep;
    return p;
}

// Multi-line rows keep the printed line breaks; with newline=keep they
// reproduce the printed I_MAX and I_S values.
const std::array<Fixture, 11> kFixtures{{
    {"X_A", "Random binary pattern.", "001101101010111001110010001001000100001000010000", Unit::bit, 48,
     bit_text_policy(), {48, 46, 40}},
    {"X_B", "Repeating binary pattern.", "101010101010101010101010101010101010101010101010", Unit::bit, 48,
     bit_text_policy(), {48, 48, 2}},
    {"X_C", "Repeating binary pattern.", "111111110000000011111111000000001111111100000000", Unit::bit, 48,
     bit_text_policy(), {48, 48, 13}},
    {"X_D", "Repeating text.",
     "The sky is blue. The sky is blue. The sky is blue. The sky is blue. The sky is blue. The sky is blue.",
     Unit::character, 101, chars_policy(NewlinePolicy::strip_all), {362, 343, 58}},
    {"X_E", "Duplicate text with one character error.",
     "The sky is blue. The sky is blue. The sky is blue. The sky is blue. The sky is glue. The sky is blue.",
     Unit::character, 101, chars_policy(NewlinePolicy::strip_all), {374, 347, 116}},
    {"X_F", "Random DNA pattern.",
     "cagtttctagctatattagcgggcacgactccactgcgcctatgcggaag\n"
     "cttgatcaaattttgaccagatcttaggtaacctgaacaagtcagttcgt\n"
     "aggcgtcgattggccgacgggtgcgaagaaaaaagtgatcgttgtccaac\n"
     "atctctagtacccaccgttgtgatgtacgttatacggacacgagcatatt",
     Unit::character, 200, chars_policy(NewlinePolicy::keep), {471, 422, 409}},
    {"X_G", "DNA segment of COVID virus.",
     "cggcagtgaggacaatcagacaactactattcaaacaattgttgaggttc\n"
     "aacctcaattagagatggaacttacaccagttgttcagactattgaagtg\n"
     "aatagttttagtggttatttaaaacttactgacaatgtatacattaaaaa\n"
     "tgcagacattgtggaagaagctaaaaaggtaaaaccaacagtggttgtta",
     Unit::character, 200, chars_policy(NewlinePolicy::keep), {471, 405, 388}},
    {"X_H", "Random string (0-9, a-z, A-Z).",
     "EK8Pi5sv2npTfzoaMNp87QtT5kbIUQkTJzHwICCstSmg4aksHT\n"
     "MwztgHFg3j8AoIobN3FycCLidGeyROiNyG5itB9kxyez1LZjFF\n"
     "HIBjipE7hidZyiJmilXM0mwnxzlzWSfQ0xP1OuFpWosMwS1cjY\n"
     "t4nyv4ONx1FceWkAf8SdvDGZVzeVzq2EmOqRF6Im2iudcYRswj",
     Unit::character, 200, chars_policy(NewlinePolicy::keep), {1209, 1174, 1174}},
    {"X_I", "English text (James Herriot's Cat Stories).",
     "I think it was the beginning of Mrs. Bond's \n"
     "unquestioning faith in me when she saw me \n"
     "quickly enveloping the cat till all you could \n"
     "see of him was a small black and white head \n"
     "protruding from an immovable cocoon of cloth.",
     Unit::character, 221, chars_policy(NewlinePolicy::keep), {1104, 971, 971}},
    {"T3a", "Repeated digits.", "123456789 123456789 123456789", Unit::character, 29,
     chars_policy(NewlinePolicy::strip_all), {{}, {}, 29}},
    {"T3b", "Repeated digits with one substituted element.", "223456789 123456789 123456789", Unit::character,
     29, chars_policy(NewlinePolicy::strip_all), {{}, {}, 50}},
}};

std::string normalize_id(std::string_view id) {
    std::string out;
    for (char c : id) {
        if (c != '_') {
            out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

} // namespace

std::span<const Fixture> fixtures() { return kFixtures; }

const Fixture& find_fixture(std::string_view id) {
    const std::string wanted = normalize_id(id);
    for (const auto& f : kFixtures) {
        if (normalize_id(f.id) == wanted) {
            return f;
        }
    }
    throw InvalidArgument("unknown fixture '" + std::string(id) + "'");
}

Pattern fixture(std::string_view id) {
    const Fixture& f = find_fixture(id);
    return ingest_bytes(f.content, f.policy).pattern;
}

std::vector<std::uint8_t> fixture_bytes(const Fixture& f) {
    if (f.unit == Unit::bit) {
        return to_bytes(fixture(f.id), SymbolMode::bit);
    }
    return {f.content.begin(), f.content.end()};
}

} // namespace infometer::corpus
