#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <unordered_set>

#include "infometer/corpus.hpp"
#include "infometer/error.hpp"

namespace infometer::corpus {

namespace {

// Unbiased bounded draw; std::uniform_int_distribution is not portable across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) {
            return x % n;
        }
    }
}

} // namespace

std::vector<Symbol> symbols_of(std::string_view chars) {
    std::vector<Symbol> out;
    out.reserve(chars.size());
    for (char c : chars) {
        out.emplace_back(std::string(1, c));
    }
    return out;
}

std::vector<Symbol> binary_alphabet() { return symbols_of("01"); }

Pattern generate(const GeneratorSpec& spec) {
    const bool periodic = spec.kind == GeneratorKind::repeat || spec.kind == GeneratorKind::repeat_with_errors;
    if (periodic && spec.period.empty()) {
        throw InvalidArgument("repeat generators need a non-empty period");
    }
    std::vector<Symbol> all = spec.alphabet;
    if (periodic) {
        all.insert(all.end(), spec.period.begin(), spec.period.end());
    }
    const Alphabet alphabet = Alphabet::from_symbols(all);
    if (alphabet.empty()) {
        throw InvalidArgument("generator alphabet is empty");
    }
    if (spec.error_rate < 0.0 || spec.error_rate > 1.0) {
        throw InvalidArgument("error rate must be in [0, 1]");
    }
    const std::uint64_t k = alphabet.size();
    std::mt19937_64 rng(spec.seed);
    std::vector<SymbolId> ids(spec.length);

    switch (spec.kind) {
    case GeneratorKind::uniform_random:
        for (auto& id : ids) {
            id = static_cast<SymbolId>(bounded(rng, k));
        }
        break;
    case GeneratorKind::ramp: {
        __extension__ using Wide = unsigned __int128;
        for (std::size_t i = 0; i < spec.length; ++i) {
            ids[i] = static_cast<SymbolId>((static_cast<Wide>(i) * k) / spec.length);
        }
        break;
    }
    case GeneratorKind::repeat:
    case GeneratorKind::repeat_with_errors: {
        std::vector<SymbolId> period;
        for (const auto& s : spec.period) {
            period.push_back(alphabet.find(s));
        }
        for (std::size_t i = 0; i < spec.length; ++i) {
            ids[i] = period[i % period.size()];
        }
        if (spec.kind == GeneratorKind::repeat) {
            break;
        }
        const auto errors = static_cast<std::size_t>(std::llround(static_cast<double>(spec.length) * spec.error_rate));
        if (errors == 0) {
            break;
        }
        if (k < 2) {
            throw InvalidArgument("substitutions need at least two symbols");
        }
        // Floyd's sampling of distinct positions, then sorted for a stable draw order.
        std::unordered_set<std::size_t> picked;
        for (std::size_t j = spec.length - errors; j < spec.length; ++j) {
            const auto t = static_cast<std::size_t>(bounded(rng, j + 1));
            if (!picked.insert(t).second) {
                picked.insert(j);
            }
        }
        std::vector<std::size_t> positions(picked.begin(), picked.end());
        std::sort(positions.begin(), positions.end());
        for (std::size_t pos : positions) {
            // Uniform over the other k-1 symbols.
            auto replacement = static_cast<SymbolId>(bounded(rng, k - 1));
            if (replacement >= ids[pos]) {
                ++replacement;
            }
            ids[pos] = replacement;
        }
        break;
    }
    }
    return Pattern::from_ids(alphabet, std::move(ids));
}

SignalSet binary_signals(std::size_t length, std::uint64_t seed) {
    GeneratorSpec base_period;
    base_period.kind = GeneratorKind::uniform_random;
    base_period.alphabet = binary_alphabet();
    base_period.length = 400;
    base_period.seed = seed;
    const auto period = generate(base_period).symbols();

    GeneratorSpec spec;
    spec.alphabet = binary_alphabet();
    spec.length = length;
    spec.seed = seed + 1;
    spec.period = period;

    SignalSet set;
    spec.kind = GeneratorKind::repeat;
    set.periodic = generate(spec);
    spec.kind = GeneratorKind::repeat_with_errors;
    spec.error_rate = 0.01;
    set.noisy_periodic = generate(spec);
    spec.kind = GeneratorKind::uniform_random;
    spec.seed = seed + 2;
    set.random = generate(spec);
    return set;
}

std::string english_like_text(std::size_t length, std::uint64_t seed) {
    static constexpr std::string_view kWords[] = {
        "the",    "of",     "and",   "to",     "a",      "in",      "is",     "it",    "you",   "that",
        "he",     "was",    "for",   "on",     "are",    "with",    "as",     "his",   "they",  "be",
        "at",     "one",    "have",  "this",   "from",   "or",      "had",    "by",    "word",  "but",
        "what",   "some",   "we",    "can",    "out",    "other",   "were",   "all",   "there", "when",
        "up",     "use",    "your",  "how",    "said",   "an",      "each",   "she",   "which", "do",
        "their",  "time",   "if",    "will",   "way",    "about",   "many",   "then",  "them",  "write",
        "would",  "like",   "so",    "these",  "her",    "long",    "make",   "thing", "see",   "him",
        "two",    "has",    "look",  "more",   "day",    "could",   "go",     "come",  "did",   "number",
        "sound",  "no",     "most",  "people", "my",     "over",    "know",   "water", "than",  "call",
        "first",  "who",    "may",   "down",   "side",   "been",    "now",    "find",  "any",   "new",
        "work",   "part",   "take",  "get",    "place",  "made",    "live",   "where", "after", "back",
        "little", "only",   "round", "man",    "year",   "came",    "show",   "every", "good",  "me",
        "give",   "our",    "under", "name",   "very",   "through", "just",   "form",  "much",  "great",
        "think",  "say",    "help",  "low",    "line",   "before",  "turn",   "cause", "same",  "mean",
        "differ", "move",   "right", "boy",    "old",    "too",     "does",   "tell",  "set",   "three",
        "want",   "air",    "well",  "also",   "play",   "small",   "end",    "put",   "home",  "read",
        "hand",   "port",   "large", "spell",  "add",    "even",    "land",   "here",  "must",  "big",
        "high",   "such",   "follow", "act",   "why",    "ask",     "men",    "change", "went", "light",
        "kind",   "off",    "need",  "house",  "picture", "try",    "us",     "again", "animal", "point",
        "mother", "world",  "near",  "build",  "self",   "earth",   "father", "head",  "stand", "own",
        "page",   "should", "country", "found", "answer", "school", "grow",   "study", "still", "learn",
        "plant",  "cover",  "food",  "sun",    "four",   "between", "state",  "keep",  "eye",   "never",
        "last",   "let",    "thought", "city", "tree",   "cross",   "farm",   "hard",  "start", "might",
        "story",  "saw",    "far",   "sea",    "draw",   "left",    "late",   "run",   "while", "press",
        "close",  "night",  "real",  "life",   "few",    "north",   "open",   "seem",  "together", "next",
        "white",  "children", "begin", "got",  "walk",   "example", "ease",   "paper", "group", "always",
    };
    constexpr std::size_t kVocabulary = sizeof(kWords) / sizeof(kWords[0]);
    std::mt19937_64 rng(seed);
    std::string text;
    text.reserve(length + 16);
    bool capitalize = true;
    while (text.size() < length) {
        // Squaring a uniform draw skews toward the front of the list, roughly like word frequencies.
        const double u = static_cast<double>(bounded(rng, 1u << 20)) / static_cast<double>(1u << 20);
        std::string word(kWords[static_cast<std::size_t>(u * u * kVocabulary)]);
        if (capitalize) {
            word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
            capitalize = false;
        }
        text += word;
        const auto punct = bounded(rng, 12);
        if (punct == 0) {
            text += ". ";
            capitalize = true;
        } else if (punct == 1) {
            text += ", ";
        } else {
            text += ' ';
        }
    }
    text.resize(length);
    return text;
}

std::size_t hamming_distance(const Pattern& a, const Pattern& b) {
    if (a.size() != b.size()) {
        throw InvalidArgument("hamming distance needs equal lengths");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.at(i) != b.at(i)) {
            ++d;
        }
    }
    return d;
}

} // namespace infometer::corpus
