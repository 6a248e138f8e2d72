#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gnorm {

// Fixed-universe dynamic bitset. All operands of binary ops must share the
// same universe size; unused tail bits are kept zero.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int universe) : n_(universe) {
        if (universe < 0) throw std::invalid_argument("Bitset: negative universe");
        words_.assign(static_cast<size_t>((universe + 63) / 64), 0);
    }

    static Bitset full(int universe) {
        Bitset b(universe);
        for (auto& w : b.words_) w = ~0ULL;
        b.trim();
        return b;
    }

    template <typename It>
    static Bitset from_range(int universe, It first, It last) {
        Bitset b(universe);
        for (; first != last; ++first) b.set(static_cast<int>(*first));
        return b;
    }

    static Bitset of(int universe, std::initializer_list<int> xs) {
        return from_range(universe, xs.begin(), xs.end());
    }

    int universe() const { return n_; }

    bool test(int i) const {
        check(i);
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1ULL;
    }

    void set(int i) {
        check(i);
        words_[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63);
    }

    void reset(int i) {
        check(i);
        words_[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        same(o);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        same(o);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        same(o);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        same(o);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    // this \ o
    Bitset and_not(const Bitset& o) const {
        same(o);
        Bitset r(n_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~o.words_[k];
        return r;
    }

    Bitset complement_set() const {
        Bitset r(n_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Numeric order: bit i weighs 2^i. Total order used for deterministic
    // family output.
    static bool value_less(const Bitset& a, const Bitset& b) {
        a.same(b);
        for (size_t k = a.words_.size(); k-- > 0;)
            if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
        return false;
    }

    int first() const { return next(-1); }

    // Smallest member > after, or -1.
    int next(int after) const {
        int i = after + 1;
        if (i >= n_) return -1;
        size_t k = static_cast<size_t>(i) >> 6;
        uint64_t w = words_[k] & (~0ULL << (i & 63));
        while (true) {
            if (w) return static_cast<int>(k * 64) + __builtin_ctzll(w);
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("Bitset: index out of range");
    }
    void same(const Bitset& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Bitset: universe mismatch");
    }
    void trim() {
        if (n_ % 64 && !words_.empty()) words_.back() &= ~0ULL >> (64 - n_ % 64);
    }

    std::vector<uint64_t> words_;
    int n_ = 0;
};

}  // namespace gnorm
