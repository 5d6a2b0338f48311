#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace radhom {

/// Element index into an operation table.
using Elem = int;

/// Dynamic bitset over element indices {0, ..., universe-1}.
///
/// Ordering is lexicographic on the sorted element lists, which is the
/// canonical order used for ideals and submodules throughout the library.
class Subset {
public:
    Subset() = default;
    explicit Subset(int universe)
        : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

    static Subset of(int universe, std::span<const Elem> elems) {
        Subset s(universe);
        for (Elem e : elems) s.insert(e);
        return s;
    }
    static Subset full(int universe) {
        Subset s(universe);
        for (Elem e = 0; e < universe; ++e) s.insert(e);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(Elem e) const {
        return (words_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
    }
    void insert(Elem e) { words_[static_cast<std::size_t>(e) >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(Elem e) { words_[static_cast<std::size_t>(e) >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const Subset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Subset& operator&=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Subset& operator|=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }

    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<Elem>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const Subset& o) const = default;

    // Lexicographic comparison of the sorted element lists. With d the least
    // element of the symmetric difference, the set containing d is smaller
    // unless the other set has nothing above d (then the other is a prefix).
    std::strong_ordering operator<=>(const Subset& o) const {
        std::size_t n = words_.size();
        for (std::size_t i = 0; i < n; ++i) {
            auto diff = words_[i] ^ o.words_[i];
            if (!diff) continue;
            int b = std::countr_zero(diff);
            bool in_this = (words_[i] >> b) & 1u;
            const Subset& other = in_this ? o : *this;
            bool other_has_more = other.has_element_above(i, b);
            if (in_this) return other_has_more ? std::strong_ordering::less : std::strong_ordering::greater;
            return other_has_more ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return universe_ <=> o.universe_;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    bool has_element_above(std::size_t word, int bit) const {
        auto rest = bit == 63 ? 0 : (words_[word] >> (bit + 1));
        if (rest) return true;
        for (std::size_t j = word + 1; j < words_.size(); ++j)
            if (words_[j]) return true;
        return false;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct SubsetHash {
    std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace radhom
