#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace moddom {

/// Fixed-width bit vector backed by 64-bit words. All set algebra is
/// word-parallel; the width never changes after construction.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t width) : n_(width), w_(word_count(width), 0) {}

    static Bitset full(std::size_t width) {
        Bitset b(width);
        for (auto& w : b.w_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t width() const { return n_; }

    bool test(std::size_t i) const {
        assert(i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    /// this \ o
    Bitset& subtract(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    Bitset complemented() const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    std::size_t intersection_count(const Bitset& o) const {
        assert(n_ == o.n_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
        return c;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    std::size_t find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return npos;
    }
    /// First set bit strictly greater than i, or npos.
    std::size_t find_next(std::size_t i) const {
        ++i;
        if (i >= n_) return npos;
        std::size_t wi = i >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == w_.size()) return npos;
            w = w_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    /// this |= (src shifted left by offset). src may be narrower than *this.
    void or_shifted(const Bitset& src, std::size_t offset) {
        assert(offset + src.n_ <= n_);
        const std::size_t ws = offset >> 6, bs = offset & 63;
        for (std::size_t i = 0; i < src.w_.size(); ++i) {
            std::uint64_t w = src.w_[i];
            if (!w) continue;
            w_[ws + i] |= w << bs;
            if (bs && ws + i + 1 < w_.size()) w_[ws + i + 1] |= w >> (64 - bs);
        }
        trim();
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int b) { v.push_back(b); });
        return v;
    }

    std::size_t hash() const {
        std::size_t h = n_ * 0x9e3779b97f4a7c15ull;
        for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
    void trim() {
        if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
inline Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
inline Bitset set_difference(Bitset a, const Bitset& b) { return a.subtract(b); }

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace moddom
