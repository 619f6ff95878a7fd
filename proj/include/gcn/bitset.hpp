#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcn {

// Fixed-size bit row over indices 0..size-1, stored as 64-bit words.
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size, bool value = false)
        : size_(size), words_((size + word_bits - 1) / word_bits, value ? ~word_type{0} : 0) {
        trim();
    }

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }
    std::span<const word_type> words() const { return words_; }

    bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
    void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t wi = from / word_bits;
        word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            word_type w = words_[wi];
            while (w) {
                f(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    // this &= ~other
    void subtract(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    }

    bool operator==(const Bitset&) const = default;

private:
    void trim() {
        if (size_ % word_bits != 0 && !words_.empty())
            words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

inline std::size_t count_and(const Bitset& a, const Bitset& b) {
    auto wa = a.words(), wb = b.words();
    std::size_t c = 0;
    for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
    return c;
}

inline std::size_t count_and(const Bitset& a, const Bitset& b, const Bitset& c) {
    auto wa = a.words(), wb = b.words(), wc = c.words();
    std::size_t n = 0;
    for (std::size_t i = 0; i < wa.size(); ++i)
        n += static_cast<std::size_t>(std::popcount(wa[i] & wb[i] & wc[i]));
    return n;
}

}  // namespace gcn
