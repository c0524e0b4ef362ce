#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace spherekit {

inline constexpr int kMaxVertices = 128;

// A set of vertex indices in [0, 128), stored as two 64-bit words.
class VertexSet {
public:
    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static VertexSet range(int count) {
        VertexSet s;
        for (int v = 0; v < count; ++v) s.insert(v);
        return s;
    }

    static VertexSet singleton(int v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    void insert(int v) {
        assert(v >= 0 && v < kMaxVertices);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    bool empty() const { return (words_[0] | words_[1]) == 0; }
    int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }

    bool is_subset_of(const VertexSet& other) const {
        return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
    }
    bool intersects(const VertexSet& other) const {
        return ((words_[0] & other.words_[0]) | (words_[1] & other.words_[1])) != 0;
    }

    // Smallest element, or -1 when empty.
    int first() const {
        if (words_[0] != 0) return std::countr_zero(words_[0]);
        if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
        return -1;
    }
    // Largest element, or -1 when empty.
    int last() const {
        if (words_[1] != 0) return 127 - std::countl_zero(words_[1]);
        if (words_[0] != 0) return 63 - std::countl_zero(words_[0]);
        return -1;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                fn(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    VertexSet operator|(const VertexSet& o) const { return VertexSet(words_[0] | o.words_[0], words_[1] | o.words_[1]); }
    VertexSet operator&(const VertexSet& o) const { return VertexSet(words_[0] & o.words_[0], words_[1] & o.words_[1]); }
    VertexSet operator-(const VertexSet& o) const { return VertexSet(words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]); }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }

    bool operator==(const VertexSet&) const = default;

    // Lexicographic order of the ascending element sequences.
    std::strong_ordering operator<=>(const VertexSet& o) const {
        const VertexSet diff(words_[0] ^ o.words_[0], words_[1] ^ o.words_[1]);
        if (diff.empty()) return std::strong_ordering::equal;
        const int m = diff.first();
        const bool mine = contains(m);
        const VertexSet& other = mine ? o : *this;
        // The set holding m continues with m; the other continues with something
        // larger, unless it has nothing left and is a proper prefix.
        VertexSet tail = other;
        for (int w = 0; w < 2; ++w) {
            const int lo = w * 64;
            if (m >= lo + 64) tail.words_[w] = 0;
            else if (m >= lo) tail.words_[w] &= ~((std::uint64_t{2} << (m - lo)) - 1);
        }
        const bool other_has_more = !tail.empty();
        if (mine) return other_has_more ? std::strong_ordering::less : std::strong_ordering::greater;
        return other_has_more ? std::strong_ordering::greater : std::strong_ordering::less;
    }

    std::size_t hash() const {
        std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ULL;
        h ^= (words_[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
        return static_cast<std::size_t>(h);
    }

private:
    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}
    std::uint64_t words_[2] = {0, 0};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace spherekit
