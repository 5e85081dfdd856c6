#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace edim {

// Dynamic fixed-width bitset. Bits beyond size() are always zero, so
// whole-word comparisons and hashes are valid.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_(static_cast<std::size_t>((nbits + 63) / 64), 0u) {}

    int size() const { return nbits_; }

    void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    // true iff every bit of o is also set here
    bool contains_all(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }

    // first set bit at position >= from, or -1
    int next_set(int from) const {
        if (from >= nbits_) return -1;
        std::size_t wi = static_cast<std::size_t>(from >> 6);
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return static_cast<int>(wi) * 64 + std::countr_zero(cur);
            if (++wi >= w_.size()) return -1;
            cur = w_[wi];
        }
    }
    int find_first() const { return next_set(0); }

    template <typename F>
    void for_each_set(F&& f) const {
        for (int i = find_first(); i >= 0; i = next_set(i + 1)) f(i);
    }

    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (int i = 0; i < nbits; ++i) b.set(i);
        return b;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;
    friend auto operator<=>(const Bitset&, const Bitset&) = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace edim
