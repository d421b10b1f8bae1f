#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kcut {

/// Fixed-universe bit vector over vertex ids 0..n-1. Immutable value type in
/// spirit: all set operations return new sets. The canonical order used for
/// deduplication and tie-breaking everywhere is lexicographic over the
/// bitstring b_0 b_1 ... b_{n-1} with '0' < '1'.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet singleton(std::size_t n, std::size_t v) {
        VertexSet s(n);
        s.set(v);
        return s;
    }

    static VertexSet full(std::size_t n) {
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v) s.set(v);
        return s;
    }

    std::size_t universe_size() const { return n_; }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    void set(std::size_t v) { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
    void reset(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    std::size_t min_element() const {  // requires nonempty
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return n_;
    }

    VertexSet operator&(const VertexSet& o) const { return apply(o, [](auto a, auto b) { return a & b; }); }
    VertexSet operator|(const VertexSet& o) const { return apply(o, [](auto a, auto b) { return a | b; }); }
    VertexSet minus(const VertexSet& o) const { return apply(o, [](auto a, auto b) { return a & ~b; }); }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool contains(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool operator<(const VertexSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        // Lexicographic over vertex ids: the first differing id decides,
        // absent ('0') sorts before present ('1'). Low ids live in low bits,
        // so reverse the bits within each word via comparison trick: compare
        // bit-reversed words. Cheaper: find first differing word, then first
        // differing bit inside it.
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != o.words_[i]) {
                std::uint64_t diff = words_[i] ^ o.words_[i];
                std::uint64_t low = diff & (~diff + 1);
                return (o.words_[i] & low) != 0;  // other has the bit -> we are smaller
            }
        }
        return false;
    }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    std::string to_bitstring() const {
        std::string s(n_, '0');
        for (std::size_t v = 0; v < n_; ++v)
            if (test(v)) s[v] = '1';
        return s;
    }

    static VertexSet from_bitstring(const std::string& bits) {
        VertexSet s(bits.size());
        for (std::size_t v = 0; v < bits.size(); ++v)
            if (bits[v] == '1') s.set(v);
        return s;
    }

    std::size_t hash() const {
        std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
        return h;
    }

private:
    template <typename Op>
    VertexSet apply(const VertexSet& o, Op op) const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
        return r;
    }

    void trim() {
        if (n_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace kcut
