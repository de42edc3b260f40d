#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace tribic {

// Fixed-width bitset with word-parallel operations. Unused bits of the
// last word are kept zero so whole-word comparisons stay valid.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t bits, bool filled = false)
        : bits_(bits), words_((bits + 63) / 64, filled ? ~std::uint64_t{0} : 0) {
        trim();
    }

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void fill() {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        trim();
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    bool all() const { return count() == bits_; }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) {
        a &= b;
        return a;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const = default;

    // Equality restricted to bits [0, k).
    bool equal_below(const Bitset& o, std::size_t k) const {
        std::size_t full = k >> 6;
        for (std::size_t i = 0; i < full; ++i)
            if (words_[i] != o.words_[i]) return false;
        std::size_t rest = k & 63;
        if (rest) {
            std::uint64_t mask = (std::uint64_t{1} << rest) - 1;
            if ((words_[full] ^ o.words_[full]) & mask) return false;
        }
        return true;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                fn(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

private:
    void trim() {
        std::size_t rest = bits_ & 63;
        if (rest && !words_.empty()) words_.back() &= (std::uint64_t{1} << rest) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tribic
