#include "infometer/pattern.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "infometer/error.hpp"

namespace infometer {

InvalidScale::InvalidScale(std::size_t scale, std::size_t length)
    : Error("invalid scale " + std::to_string(scale) + " for pattern of length " + std::to_string(length)),
      scale_(scale), length_(length) {}

DecodeError::DecodeError(std::size_t offset, const std::string& what)
    : Error(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}

Alphabet Alphabet::from_symbols(std::vector<Symbol> symbols) {
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    Alphabet a;
    a.symbols_ = std::move(symbols);
    return a;
}

SymbolId Alphabet::find(const Symbol& s) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end() || *it != s) {
        return static_cast<SymbolId>(symbols_.size());
    }
    return static_cast<SymbolId>(it - symbols_.begin());
}

Pattern Pattern::from_symbols(std::span<const Symbol> symbols) {
    Pattern p;
    p.alphabet_ = Alphabet::from_symbols({symbols.begin(), symbols.end()});
    std::unordered_map<std::string_view, SymbolId> index;
    index.reserve(p.alphabet_.size());
    for (SymbolId id = 0; id < p.alphabet_.size(); ++id) {
        index.emplace(p.alphabet_[id].bytes, id);
    }
    p.ids_.reserve(symbols.size());
    for (const auto& s : symbols) {
        p.ids_.push_back(index.at(s.bytes));
    }
    return p;
}

Pattern Pattern::from_chars(std::string_view text) {
    std::array<bool, 256> seen{};
    for (unsigned char c : text) {
        seen[c] = true;
    }
    std::array<SymbolId, 256> remap{};
    std::vector<Symbol> symbols;
    for (unsigned c = 0; c < 256; ++c) {
        if (seen[c]) {
            remap[c] = static_cast<SymbolId>(symbols.size());
            symbols.emplace_back(std::string(1, static_cast<char>(c)));
        }
    }
    Pattern p;
    p.alphabet_ = Alphabet::from_symbols(std::move(symbols));
    p.ids_.reserve(text.size());
    for (unsigned char c : text) {
        p.ids_.push_back(remap[c]);
    }
    return p;
}

Pattern Pattern::from_ids(const Alphabet& alphabet, std::vector<SymbolId> ids) {
    std::vector<char> used(alphabet.size(), 0);
    for (SymbolId id : ids) {
        if (id >= alphabet.size()) {
            throw InvalidArgument("symbol id " + std::to_string(id) + " outside alphabet of size " +
                                  std::to_string(alphabet.size()));
        }
        used[id] = 1;
    }
    Pattern p;
    if (std::find(used.begin(), used.end(), 0) == used.end()) {
        p.alphabet_ = alphabet;
        p.ids_ = std::move(ids);
        return p;
    }
    std::vector<SymbolId> remap(alphabet.size(), 0);
    std::vector<Symbol> kept;
    for (SymbolId id = 0; id < alphabet.size(); ++id) {
        if (used[id]) {
            remap[id] = static_cast<SymbolId>(kept.size());
            kept.push_back(alphabet[id]);
        }
    }
    for (auto& id : ids) {
        id = remap[id];
    }
    p.alphabet_ = Alphabet::from_symbols(std::move(kept));
    p.ids_ = std::move(ids);
    return p;
}

std::vector<Symbol> Pattern::symbols() const {
    std::vector<Symbol> out;
    out.reserve(ids_.size());
    for (SymbolId id : ids_) {
        out.push_back(alphabet_[id]);
    }
    return out;
}

Pattern Pattern::reversed() const {
    Pattern p = *this;
    std::reverse(p.ids_.begin(), p.ids_.end());
    return p;
}

Pattern Pattern::slice(std::size_t begin, std::size_t count) const {
    if (begin > ids_.size() || count > ids_.size() - begin) {
        throw InvalidArgument("slice out of range");
    }
    return from_ids(alphabet_, {ids_.begin() + begin, ids_.begin() + begin + count});
}

Pattern operator+(const Pattern& a, const Pattern& b) {
    std::vector<Symbol> all(a.alphabet_.symbols().begin(), a.alphabet_.symbols().end());
    all.insert(all.end(), b.alphabet_.symbols().begin(), b.alphabet_.symbols().end());
    Alphabet merged = Alphabet::from_symbols(std::move(all));
    std::vector<SymbolId> ids;
    ids.reserve(a.size() + b.size());
    for (const Pattern* part : {&a, &b}) {
        std::vector<SymbolId> remap(part->alphabet_.size());
        for (SymbolId id = 0; id < remap.size(); ++id) {
            remap[id] = merged.find(part->alphabet_[id]);
        }
        for (SymbolId id : part->ids_) {
            ids.push_back(remap[id]);
        }
    }
    Pattern p;
    p.alphabet_ = std::move(merged);
    p.ids_ = std::move(ids);
    return p;
}

bool operator==(const Pattern& a, const Pattern& b) {
    return a.alphabet_ == b.alphabet_ && a.ids_ == b.ids_;
}

Symbol Block::as_symbol() const {
    std::string out;
    const auto& alphabet = owner_->alphabet();
    for (SymbolId id : ids()) {
        const std::string& bytes = alphabet[id].bytes;
        const auto len = static_cast<std::uint32_t>(bytes.size());
        for (int shift = 24; shift >= 0; shift -= 8) {
            out.push_back(static_cast<char>((len >> shift) & 0xff));
        }
        out += bytes;
    }
    return Symbol(std::move(out));
}

bool operator==(const Block& a, const Block& b) {
    if (a.size() != b.size()) {
        return false;
    }
    auto ia = a.ids();
    auto ib = b.ids();
    if (a.owner_ == b.owner_ || a.owner_->alphabet() == b.owner_->alphabet()) {
        return std::equal(ia.begin(), ia.end(), ib.begin());
    }
    for (std::size_t i = 0; i < ia.size(); ++i) {
        if (a.owner_->alphabet()[ia[i]] != b.owner_->alphabet()[ib[i]]) {
            return false;
        }
    }
    return true;
}

Partition::Partition(const Pattern& pattern, std::size_t scale)
    : pattern_(&pattern), scale_(scale), count_(0) {
    if (scale == 0 || scale > pattern.size()) {
        throw InvalidScale(scale, pattern.size());
    }
    count_ = pattern.size() / scale;
}

Pattern Partition::to_pattern() const {
    std::vector<Symbol> blocks;
    blocks.reserve(count_);
    for (std::size_t j = 0; j < count_; ++j) {
        blocks.push_back((*this)[j].as_symbol());
    }
    return Pattern::from_symbols(blocks);
}

Partition partition(const Pattern& pattern, std::size_t scale) {
    return Partition(pattern, scale);
}

} // namespace infometer
