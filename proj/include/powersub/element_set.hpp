#pragma once

#include "powersub/group_table.hpp"

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace powersub {

/// Subset of a group's elements as a membership bit vector.
///
/// Ordering compares the bit vectors as unsigned integers with element i at
/// bit i, so {identity = 0} sorts first and the whole group sorts last among
/// its subgroups. This is the canonical order of every subgroup listing.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<Elem> elems) : ElementSet(universe) {
        for (Elem e : elems) insert(e);
    }

    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        for (Elem e = 0; e < universe; ++e) s.insert(e);
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Elem e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void insert(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(Elem e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const ElementSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    ElementSet& operator|=(const ElementSet& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        out.reserve(size());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                out.push_back(static_cast<Elem>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<Elem>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    /// Big-endian hex rendering of the bit vector (element 0 is the lowest bit).
    std::string to_hex() const;

    std::size_t hash() const noexcept {
        std::size_t h = universe_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
    friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept {
        if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

} // namespace powersub
