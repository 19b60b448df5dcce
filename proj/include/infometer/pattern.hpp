#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace infometer {

/// An opaque token identified by its canonical byte string.
/// Ordering is lexicographic on unsigned bytes.
struct Symbol {
    std::string bytes;

    Symbol() = default;
    explicit Symbol(std::string b) : bytes(std::move(b)) {}

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
        const int c = a.bytes.compare(b.bytes);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
};

/// Dense index of a symbol within its pattern's alphabet.
using SymbolId = std::uint32_t;

/// The sorted set of distinct symbols occurring in a pattern.
class Alphabet {
public:
    Alphabet() = default;

    /// Sorts and deduplicates.
    static Alphabet from_symbols(std::vector<Symbol> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const Symbol& operator[](SymbolId id) const { return symbols_[id]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// Returns size() when the symbol is not a member.
    SymbolId find(const Symbol& s) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Symbol> symbols_;
};

/// An immutable finite sequence of symbols.
///
/// Stored as dense ids into the observed alphabet; id order equals symbol
/// order, so comparisons on ids agree with comparisons on symbols.
class Pattern {
public:
    Pattern() = default;

    static Pattern from_symbols(std::span<const Symbol> symbols);
    /// One symbol per byte of the input.
    static Pattern from_chars(std::string_view text);
    /// `ids` index into `alphabet`; unused alphabet entries are dropped.
    static Pattern from_ids(const Alphabet& alphabet, std::vector<SymbolId> ids);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }

    std::span<const SymbolId> ids() const noexcept { return ids_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Symbol& at(std::size_t i) const { return alphabet_[ids_.at(i)]; }

    std::vector<Symbol> symbols() const;
    Pattern reversed() const;
    Pattern slice(std::size_t begin, std::size_t count) const;

    /// Concatenation; the result's alphabet is the union.
    friend Pattern operator+(const Pattern& a, const Pattern& b);
    /// Element-wise equality on symbols.
    friend bool operator==(const Pattern& a, const Pattern& b);

private:
    Alphabet alphabet_;
    std::vector<SymbolId> ids_;
};

/// Contiguous run of `length` symbols of a pattern. Compares by content.
class Block {
public:
    Block(const Pattern& owner, std::size_t offset, std::size_t length)
        : owner_(&owner), offset_(offset), length_(length) {}

    std::size_t size() const noexcept { return length_; }
    std::size_t offset() const noexcept { return offset_; }
    std::span<const SymbolId> ids() const noexcept { return owner_->ids().subspan(offset_, length_); }

    /// Injective encoding of the block contents (length-prefixed symbol bytes),
    /// so the block can act as a Symbol at the coarser scale.
    Symbol as_symbol() const;

    friend bool operator==(const Block& a, const Block& b);

private:
    const Pattern* owner_;
    std::size_t offset_;
    std::size_t length_;
};

/// Non-overlapping blocks of length r; the trailing N mod r symbols are dropped.
class Partition {
public:
    Partition(const Pattern& pattern, std::size_t scale);

    std::size_t scale() const noexcept { return scale_; }
    std::size_t size() const noexcept { return count_; }
    std::size_t dropped() const noexcept { return pattern_->size() - count_ * scale_; }
    Block operator[](std::size_t j) const { return Block(*pattern_, j * scale_, scale_); }

    /// The block sequence as a pattern over block-symbols.
    Pattern to_pattern() const;

private:
    const Pattern* pattern_;
    std::size_t scale_;
    std::size_t count_;
};

/// Throws InvalidScale unless 1 <= r <= N.
Partition partition(const Pattern& pattern, std::size_t scale);

} // namespace infometer
