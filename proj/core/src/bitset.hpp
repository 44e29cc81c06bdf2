#pragma once

// Internal dynamic bitset used by the clique and independence solvers.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace xbound::detail {

struct VertexSet {
    std::vector<std::uint64_t> words;

    explicit VertexSet(int word_count) : words(static_cast<std::size_t>(word_count), 0) {}

    bool empty() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : words) c += std::popcount(w);
        return c;
    }
    bool test(int v) const { return (words[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u; }
    void set(int v) { words[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

    int intersection_count(std::span<const std::uint64_t> other) const {
        int c = 0;
        for (std::size_t k = 0; k < words.size(); ++k) c += std::popcount(words[k] & other[k]);
        return c;
    }
    VertexSet intersect(std::span<const std::uint64_t> other) const {
        VertexSet out(static_cast<int>(words.size()));
        for (std::size_t k = 0; k < words.size(); ++k) out.words[k] = words[k] & other[k];
        return out;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words.size(); ++k) {
            std::uint64_t w = words[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64) + b);
                w &= w - 1;
            }
        }
    }
};

}  // namespace xbound::detail
