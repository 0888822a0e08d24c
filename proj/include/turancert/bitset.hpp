#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace turancert {

// Flat bit set with capacity fixed at construction.  Adjacency rows and
// candidate sets in the clique kernels are all instances of this, so the
// operations below are exactly the ones those inner loops need.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int capacity() const { return bits_; }

    bool test(int i) const { return (words_[word(i)] >> bit(i)) & 1u; }
    void set(int i) { words_[word(i)] |= one(i); }
    void reset(int i) { words_[word(i)] &= ~one(i); }

    // set bits [0, k)
    void set_first(int k) {
        assert(k <= bits_);
        for (int i = 0; i < k; ++i) set(i);
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& rhs) {
        assert(bits_ == rhs.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& rhs) {
        assert(bits_ == rhs.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
        return *this;
    }
    // *this &= ~rhs
    Bitset& subtract(const Bitset& rhs) {
        assert(bits_ == rhs.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~rhs.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset lhs, const Bitset& rhs) {
        lhs &= rhs;
        return lhs;
    }

    // |*this ∩ rhs| without allocating
    int and_count(const Bitset& rhs) const {
        assert(bits_ == rhs.bits_);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & rhs.words_[i]);
        return c;
    }

    bool intersects(const Bitset& rhs) const {
        assert(bits_ == rhs.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & rhs.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& rhs) const {
        assert(bits_ == rhs.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~rhs.words_[i]) return false;
        return true;
    }

    // drop bits [0, i]
    void drop_through(int i) {
        if (i < 0) return;
        if (i >= bits_) {
            clear();
            return;
        }
        std::size_t w = word(i);
        for (std::size_t k = 0; k < w; ++k) words_[k] = 0;
        int b = bit(i);
        if (b == 63)
            words_[w] = 0;
        else
            words_[w] &= ~std::uint64_t{0} << (b + 1);
    }

    int first() const { return next(0); }

    // first set bit >= from, or -1
    int next(int from) const {
        if (from >= bits_) return -1;
        std::size_t w = word(from);
        std::uint64_t cur = words_[w] >> bit(from);
        if (cur) return from + std::countr_zero(cur);
        for (++w; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                f(static_cast<int>(w * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    static std::size_t word(int i) { return static_cast<std::size_t>(i) >> 6; }
    static int bit(int i) { return i & 63; }
    static std::uint64_t one(int i) { return std::uint64_t{1} << bit(i); }

    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace turancert
