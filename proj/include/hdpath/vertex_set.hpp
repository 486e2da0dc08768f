#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hdpath {

// Hard cap on graph order. Every bitset row is kWords machine words.
inline constexpr int kMaxVertices = 128;
inline constexpr int kWords = kMaxVertices / 64;

// Fixed-width vertex bitset. Vertices are dense integers in [0, kMaxVertices).
class VertexSet {
public:
    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static VertexSet range(int lo, int hi) {
        VertexSet s;
        for (int v = lo; v < hi; ++v) s.insert(v);
        return s;
    }
    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    void insert(int v) { words_[v >> 6] |= bit(v); }
    void erase(int v) { words_[v >> 6] &= ~bit(v); }
    bool contains(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    // Lowest element, or -1 when empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }
    // Lowest element strictly greater than v, or -1.
    int next(int v) const {
        ++v;
        if (v >= kMaxVertices) return -1;
        int i = v >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (w) return i * 64 + std::countr_zero(w);
            if (++i == kWords) return -1;
            w = words_[i];
        }
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v : *this) out.push_back(v);
        return out;
    }

    const std::array<std::uint64_t, kWords>& words() const { return words_; }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = set_->next(v_);
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

    private:
        const VertexSet* set_ = nullptr;
        int v_ = -1;
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }
    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace hdpath
