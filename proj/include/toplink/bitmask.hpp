#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace toplink {

/// Subset of {0, ..., width-1} packed into 64-bit words.
///
/// Width is fixed at construction; operations that combine two masks
/// require equal widths. Unused high bits of the last word stay zero,
/// which makes word-wise comparison and popcount safe.
class Bitmask {
public:
    Bitmask() = default;

    explicit Bitmask(std::size_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const { return width_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitmask& operator&=(const Bitmask& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitmask& operator|=(const Bitmask& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    friend Bitmask operator&(Bitmask a, const Bitmask& b) { a &= b; return a; }
    friend Bitmask operator|(Bitmask a, const Bitmask& b) { a |= b; return a; }

    bool is_subset_of(const Bitmask& o) const {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// All bits set; the canonical "whole ground set" mask.
    static Bitmask full(std::size_t width) {
        Bitmask m(width);
        for (std::size_t i = 0; i + 1 < m.words_.size(); ++i)
            m.words_[i] = ~std::uint64_t{0};
        if (width > 0) {
            const std::size_t rem = width & 63;
            m.words_.back() = rem ? (~std::uint64_t{0} >> (64 - rem)) : ~std::uint64_t{0};
        }
        return m;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                f(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bitmask& o) const {
        return width_ == o.width_ && words_ == o.words_;
    }

    /// Lexicographic on (width, words); used as an ordered map key.
    bool operator<(const Bitmask& o) const {
        if (width_ != o.width_) return width_ < o.width_;
        return words_ < o.words_;
    }

    /// |a & b| without allocating a temporary.
    friend std::size_t intersection_count(const Bitmask& a, const Bitmask& b) {
        a.check_width(b);
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

private:
    void check_width(const Bitmask& o) const {
        if (width_ != o.width_)
            throw std::invalid_argument("Bitmask: width mismatch");
    }

    void check_index(std::size_t i) const {
        if (i >= width_) throw std::out_of_range("Bitmask: bit index out of range");
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace toplink
