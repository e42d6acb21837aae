#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tg {

// A set of variable indices (the label of an edge, the unit set of an
// assignment, or any other index set). Backed by 64-bit blocks with trailing
// zero blocks trimmed, so equality and ordering are canonical.
//
// The total order is bitstring-lexicographic with index 0 compared first,
// matching the line order of truth-table files.
class LabelSet {
public:
    LabelSet() = default;

    LabelSet(std::initializer_list<std::size_t> indices) {
        for (std::size_t i : indices) insert(i);
    }

    static LabelSet single(std::size_t index) {
        LabelSet s;
        s.insert(index);
        return s;
    }

    // Builds a set from the low 64 indices given as a bit mask.
    static LabelSet from_mask(std::uint64_t mask) {
        LabelSet s;
        if (mask) s.blocks_.push_back(mask);
        return s;
    }

    bool contains(std::size_t index) const {
        std::size_t b = index / 64;
        return b < blocks_.size() && (blocks_[b] >> (index % 64)) & 1u;
    }

    void insert(std::size_t index) {
        std::size_t b = index / 64;
        if (b >= blocks_.size()) blocks_.resize(b + 1, 0);
        blocks_[b] |= std::uint64_t{1} << (index % 64);
    }

    void erase(std::size_t index) {
        std::size_t b = index / 64;
        if (b >= blocks_.size()) return;
        blocks_[b] &= ~(std::uint64_t{1} << (index % 64));
        trim();
    }

    bool empty() const { return blocks_.empty(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t b : blocks_) n += std::popcount(b);
        return n;
    }

    // Largest contained index; undefined on the empty set.
    std::size_t max_index() const {
        std::size_t b = blocks_.size() - 1;
        return b * 64 + (63 - std::countl_zero(blocks_[b]));
    }

    LabelSet& operator|=(const LabelSet& other) {
        if (other.blocks_.size() > blocks_.size())
            blocks_.resize(other.blocks_.size(), 0);
        for (std::size_t i = 0; i < other.blocks_.size(); ++i)
            blocks_[i] |= other.blocks_[i];
        return *this;
    }

    LabelSet& operator&=(const LabelSet& other) {
        if (blocks_.size() > other.blocks_.size())
            blocks_.resize(other.blocks_.size());
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= other.blocks_[i];
        trim();
        return *this;
    }

    // Removes every element of `other`.
    LabelSet& operator-=(const LabelSet& other) {
        std::size_t n = std::min(blocks_.size(), other.blocks_.size());
        for (std::size_t i = 0; i < n; ++i) blocks_[i] &= ~other.blocks_[i];
        trim();
        return *this;
    }

    friend LabelSet operator|(LabelSet a, const LabelSet& b) { return a |= b; }
    friend LabelSet operator&(LabelSet a, const LabelSet& b) { return a &= b; }
    friend LabelSet operator-(LabelSet a, const LabelSet& b) { return a -= b; }

    bool subset_of(const LabelSet& other) const {
        if (blocks_.size() > other.blocks_.size()) return false;
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~other.blocks_[i]) return false;
        return true;
    }

    bool intersects(const LabelSet& other) const {
        std::size_t n = std::min(blocks_.size(), other.blocks_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (blocks_[i] & other.blocks_[i]) return true;
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t b = blocks_[i];
            while (b) {
                std::size_t k = std::countr_zero(b);
                f(i * 64 + k);
                b &= b - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> v;
        v.reserve(count());
        for_each([&](std::size_t i) { v.push_back(i); });
        return v;
    }

    // Low 64 indices as a mask. Callers with universe <= 64 use this fast path.
    std::uint64_t low_mask() const { return blocks_.empty() ? 0 : blocks_[0]; }

    friend bool operator==(const LabelSet&, const LabelSet&) = default;

    friend bool operator<(const LabelSet& a, const LabelSet& b) {
        std::size_t n = std::max(a.blocks_.size(), b.blocks_.size());
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t x = i < a.blocks_.size() ? a.blocks_[i] : 0;
            std::uint64_t y = i < b.blocks_.size() ? b.blocks_[i] : 0;
            std::uint64_t diff = x ^ y;
            if (diff) {
                // First differing index decides; '1' on the right sorts later.
                return (y >> std::countr_zero(diff)) & 1u;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t b : blocks_) {
            h ^= b;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    void trim() {
        while (!blocks_.empty() && blocks_.back() == 0) blocks_.pop_back();
    }

    std::vector<std::uint64_t> blocks_;
};

struct LabelSetHash {
    std::size_t operator()(const LabelSet& s) const { return s.hash(); }
};

// Vertex sets and other index sets share the representation.
using IndexSet = LabelSet;

}  // namespace tg
