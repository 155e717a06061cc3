#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclocdim {

using Vertex = std::size_t;

/**
 * Fixed-width bitset over the vertex indices 0..n-1 of one graph.
 *
 * Bits at positions >= size() are always zero, so word-wise comparisons and
 * popcounts never need masking.
 */
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}
    VertexSet(std::size_t n, std::initializer_list<Vertex> members) : VertexSet(n) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(std::size_t n) {
        VertexSet s(n);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    std::size_t size() const { return n_; }

    bool contains(Vertex v) const {
        return v < n_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
    }
    void insert(Vertex v) {
        check(v);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void erase(Vertex v) {
        check(v);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    bool intersects(const VertexSet& o) const {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet c(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.trim();
        return c;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Orders by width, then lexicographically on the word array (low word first).
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.words_ < b.words_;
    }

    /// Calls fn(v) for each member in increasing order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                fn(i * kWordBits + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    /// Lowest member, or size() when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return n_;
    }

    /// Renders as "{0,2,5}".
    std::string to_string() const {
        std::string s = "{";
        bool first_item = true;
        for_each([&](Vertex v) {
            if (!first_item) s += ',';
            s += std::to_string(v);
            first_item = false;
        });
        return s + "}";
    }

    const std::vector<Word>& words() const { return words_; }

    std::size_t hash() const {
        std::size_t h = std::hash<std::size_t>{}(n_);
        for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void check(Vertex v) const {
        if (v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside set of width " +
                                    std::to_string(n_));
    }
    void same_width(const VertexSet& o) const {
        if (o.n_ != n_) throw std::invalid_argument("VertexSet width mismatch");
    }
    void trim() {
        if (n_ % kWordBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (n_ % kWordBits)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<Word> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace fraclocdim
