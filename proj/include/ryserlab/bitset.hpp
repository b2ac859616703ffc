#pragma once

#include <cstdint>
#include <vector>

namespace ryserlab {

// Fixed-width dynamic bitset. The cover solver lives on these.
struct Bitset {
    int nbits = 0;
    std::vector<uint64_t> w;

    Bitset() = default;
    explicit Bitset(int n) : nbits(n), w((n + 63) / 64, 0) {}

    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ULL; }

    int count() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }

    bool none() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w.size(); i++) w[i] |= o.w[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w.size(); i++) w[i] &= o.w[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w.size(); i++)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) = default;
};

inline int count_and(const Bitset& a, const Bitset& b) {
    int c = 0;
    for (size_t i = 0; i < a.w.size(); i++)
        c += __builtin_popcountll(a.w[i] & b.w[i]);
    return c;
}

// popcount of a & ~b
inline int count_andnot(const Bitset& a, const Bitset& b) {
    int c = 0;
    for (size_t i = 0; i < a.w.size(); i++)
        c += __builtin_popcountll(a.w[i] & ~b.w[i]);
    return c;
}

}  // namespace ryserlab
