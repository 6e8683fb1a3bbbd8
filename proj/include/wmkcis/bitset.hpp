#ifndef WMKCIS_BITSET_HPP
#define WMKCIS_BITSET_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace wmkcis {

// Fixed-universe dynamic bitset. All set operations require both operands to
// share the same universe size. Vertex ids are dense 0..n-1.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) set(v);
    }

    int universe() const { return n_; }

    void set(int v) {
        check(v);
        words_[static_cast<size_t>(v) >> 6] |= (uint64_t{1} << (v & 63));
    }
    void reset(int v) {
        check(v);
        words_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
    }
    bool test(int v) const {
        check(v);
        return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1;
    }
    void clear() { for (auto& w : words_) w = 0; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    VertexSet& operator|=(const VertexSet& o) {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool intersects(const VertexSet& o) const {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // First member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }
    // First member strictly greater than v, or -1.
    int next(int v) const {
        if (v + 1 >= n_) return -1;
        int start = v + 1;
        size_t wi = static_cast<size_t>(start) >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (start & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + __builtin_ctzll(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int v = first(); v >= 0; v = next(v)) fn(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Lexicographic order of the ascending member sequences; a proper prefix
    // sorts before its extensions, so the empty set is smallest. This is the
    // deterministic tie-break order used throughout the solver and oracles.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        int va = a.first(), vb = b.first();
        while (va >= 0 && vb >= 0) {
            if (va != vb) return va < vb;
            va = a.next(va);
            vb = b.next(vb);
        }
        return va < 0 && vb >= 0;
    }

    // Fast path for universes of at most 64 vertices (the enumeration core
    // works on plain words and writes results through).
    uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
    void assign_low_word(uint64_t w) {
        if (n_ > 64) throw std::logic_error("VertexSet: low-word access beyond 64 vertices");
        if (!words_.empty()) words_[0] = n_ == 64 ? w : (w & ((uint64_t{1} << n_) - 1));
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(n_);
        for (uint64_t w : words_) h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void same(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int n_;
    std::vector<uint64_t> words_;
};

struct VertexSetLexLess {
    bool operator()(const VertexSet& a, const VertexSet& b) const { return VertexSet::lex_less(a, b); }
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace wmkcis

#endif
