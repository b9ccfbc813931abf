#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace makergame {

// Fixed-size bitset sized at runtime. Word-based so that intersections and
// popcounts over descendant sets and hyperedge members stay cheap.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    static std::size_t and_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    // index of the first bit set in a but not in b, or npos
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static std::size_t first_and_not(const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t w = a.words_[i] & ~b.words_[i];
            if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
        }
        return npos;
    }

    // first index < size() whose bit is clear, or npos
    std::size_t first_unset() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = ~words_[i];
            if (!w) continue;
            std::size_t idx = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
            return idx < n_ ? idx : npos;
        }
        return npos;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool operator==(const Bitset&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace makergame
