#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

namespace pg {

using VertexId = std::uint32_t;

// Set of vertex ids over a fixed universe [0, universe_size), backed by a
// bit vector. Copies are cheap (one word per 64 vertices) and iteration
// yields ids in ascending order. Bits beyond the universe are kept zero so
// that whole-word operations and equality stay exact.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t universe_size)
        : universe_(universe_size), words_((universe_size + 63) / 64, 0) {}

    static VertexSet all(std::size_t universe_size) {
        VertexSet s(universe_size);
        for (std::size_t i = 0; i < s.words_.size(); i++) s.words_[i] = ~0ull;
        s.trim();
        return s;
    }

    static VertexSet of(std::size_t universe_size, std::initializer_list<VertexId> ids) {
        VertexSet s(universe_size);
        for (VertexId v : ids) s.insert(v);
        return s;
    }

    std::size_t universe_size() const { return universe_; }

    bool contains(VertexId v) const {
        assert(v < universe_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(VertexId v) {
        assert(v < universe_);
        words_[v >> 6] |= 1ull << (v & 63);
    }

    void erase(VertexId v) {
        assert(v < universe_);
        words_[v >> 6] &= ~(1ull << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) {
            if (w) return false;
        }
        return true;
    }

    std::optional<VertexId> highest() const {
        for (std::size_t wi = words_.size(); wi-- > 0;) {
            if (words_[wi]) return VertexId((wi << 6) + 63 - std::countl_zero(words_[wi]));
        }
        return std::nullopt;
    }

    bool intersects(const VertexSet& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); i++) {
            if (words_[i] & other.words_[i]) return true;
        }
        return false;
    }

    bool is_subset_of(const VertexSet& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); i++) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& other) {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); i++) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); i++) words_[i] &= other.words_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& other) {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); i++) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        const_iterator() = default;
        const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

        VertexId operator*() const { return VertexId(pos_); }

        const_iterator& operator++() {
            pos_ = set_->find_next(pos_ + 1);
            return *this;
        }

        const_iterator operator++(int) {
            const_iterator old = *this;
            ++*this;
            return old;
        }

        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        const VertexSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    const_iterator begin() const { return const_iterator(this, find_next(0)); }
    const_iterator end() const { return const_iterator(this, universe_); }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(count());
        for (VertexId v : *this) out.push_back(v);
        return out;
    }

private:
    // First member >= from, or universe_size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= universe_) return universe_;
        std::size_t wi = from >> 6;
        std::uint64_t chunk = words_[wi] & (~0ull << (from & 63));
        while (true) {
            if (chunk) return (wi << 6) + std::countr_zero(chunk);
            if (++wi == words_.size()) return universe_;
            chunk = words_[wi];
        }
    }

    void trim() {
        if (universe_ & 63) words_.back() &= ~0ull >> (64 - (universe_ & 63));
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace pg
