#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rainbow {

// Fixed-universe bitset used for vertex sets and color sets.  One word covers
// n <= 64; larger universes spill into more words with the same interface.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static Bitset of(int universe, std::initializer_list<int> bits) {
        Bitset s(universe);
        for (int b : bits) s.set(b);
        return s;
    }

    static Bitset full(int universe) {
        Bitset s(universe);
        for (int i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    bool empty() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace rainbow
