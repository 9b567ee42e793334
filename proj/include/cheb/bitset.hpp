#pragma once

#include <cstdint>
#include <vector>

namespace cheb {

// Fixed-size bit set over {0..n-1}; the workhorse for subgroup membership
// and intersection-matrix rows.
struct DynBitset {
    size_t n = 0;
    std::vector<uint64_t> words;

    DynBitset() = default;
    explicit DynBitset(size_t bits) : n(bits), words((bits + 63) / 64, 0) {}

    void set(size_t i) { words[i >> 6] |= 1ull << (i & 63); }
    void reset(size_t i) { words[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }

    size_t count() const {
        size_t c = 0;
        for (uint64_t w : words) c += static_cast<size_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (uint64_t w : words)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    void and_with(const DynBitset& o) {
        for (size_t i = 0; i < words.size(); ++i) words[i] &= o.words[i];
    }
    void or_with(const DynBitset& o) {
        for (size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
    }
    void andnot_with(const DynBitset& o) {  // this &= ~o
        for (size_t i = 0; i < words.size(); ++i) words[i] &= ~o.words[i];
    }
    bool contains(const DynBitset& o) const {  // o subset of this
        for (size_t i = 0; i < words.size(); ++i)
            if (o.words[i] & ~words[i]) return false;
        return true;
    }
    bool operator==(const DynBitset& o) const { return n == o.n && words == o.words; }

    // true if this set, viewed as an ascending list of members, is
    // lexicographically smaller than o; used for deterministic
    // representative choice
    bool lex_less(const DynBitset& o) const {
        for (size_t i = 0; i < words.size(); ++i) {
            uint64_t diff = words[i] ^ o.words[i];
            if (diff) return words[i] & (diff & -diff);  // whoever owns the lowest differing bit
        }
        return false;
    }

    template <typename F>
    void for_each(F f) const {
        for (size_t wi = 0; wi < words.size(); ++wi)
            for (uint64_t w = words[wi]; w; w &= w - 1)
                f((wi << 6) + static_cast<size_t>(__builtin_ctzll(w)));
    }
};

struct DynBitsetHash {
    size_t operator()(const DynBitset& b) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : b.words) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace cheb
