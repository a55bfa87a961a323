#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dcst {

// Dense index set over a fixed universe 0..universe_size-1, bitset-backed.
// The tag type keeps vertex sets and edge sets from mixing.
template <class Tag>
class BasicIndexSet {
public:
    BasicIndexSet() = default;
    explicit BasicIndexSet(int universe)
        : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
        assert(universe >= 0);
    }

    static BasicIndexSet of(int universe, std::initializer_list<int> items) {
        BasicIndexSet s(universe);
        for (int i : items) s.insert(i);
        return s;
    }

    int universe_size() const { return universe_; }

    bool contains(int i) const {
        assert(i >= 0 && i < universe_);
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }

    void insert(int i) {
        assert(i >= 0 && i < universe_);
        words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }

    void erase(int i) {
        assert(i >= 0 && i < universe_);
        words_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
    }

    int size() const {
        int total = 0;
        for (std::uint64_t w : words_) total += std::popcount(w);
        return total;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    BasicIndexSet complement() const {
        BasicIndexSet out(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = ~words_[k];
        out.trim();
        return out;
    }

    // Visits members in increasing index order.
    template <class F>
    void for_each(F&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int bit = std::countr_zero(w);
                fn(static_cast<int>(k) * 64 + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const BasicIndexSet&, const BasicIndexSet&) = default;

private:
    void trim() {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

using EdgeSet = BasicIndexSet<struct EdgeSetTag>;
using VertexSet = BasicIndexSet<struct VertexSetTag>;

}  // namespace dcst
