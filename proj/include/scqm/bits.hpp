#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace scqm {

// Packed GF(2) vector. Bits beyond `n` are kept zero so that equality,
// hashing and popcount can work on whole words.
struct BitVec {
    int n = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(int nbits) : n(nbits), w((nbits + 63) / 64, 0) {}

    static BitVec zeros(int nbits) { return BitVec(nbits); }

    int size() const { return n; }
    int words() const { return (int)w.size(); }

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w[i >> 6] |= m; else w[i >> 6] &= ~m;
    }
    void flip(int i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }

    void clear() { for (auto& x : w) x = 0; }

    bool any() const {
        for (auto x : w) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    int popcount() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }

    void operator^=(const BitVec& o) {
        for (size_t i = 0; i < w.size(); i++) w[i] ^= o.w[i];
    }
    void operator&=(const BitVec& o) {
        for (size_t i = 0; i < w.size(); i++) w[i] &= o.w[i];
    }
    void operator|=(const BitVec& o) {
        for (size_t i = 0; i < w.size(); i++) w[i] |= o.w[i];
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    friend BitVec operator&(BitVec a, const BitVec& b) { a &= b; return a; }

    // parity of <a,b> over GF(2)
    static bool dot(const BitVec& a, const BitVec& b) {
        uint64_t acc = 0;
        for (size_t i = 0; i < a.w.size(); i++) acc ^= a.w[i] & b.w[i];
        return __builtin_popcountll(acc) & 1;
    }

    // index of lowest set bit, -1 if none
    int lowest() const {
        for (size_t i = 0; i < w.size(); i++)
            if (w[i]) return (int)(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }

    std::vector<int> ones() const {
        std::vector<int> out;
        for (size_t i = 0; i < w.size(); i++) {
            uint64_t x = w[i];
            while (x) {
                out.push_back((int)(i * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    uint64_t hash() const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (auto x : w) { h ^= x; h *= 0x100000001b3ull; }
        return h;
    }
};

// Row-reduced GF(2) system with combination tracking.  Rows are appended and
// reduced incrementally; pivots use lowest column index first so canonical
// forms are reproducible.
class Gf2Basis {
public:
    explicit Gf2Basis(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return (int)rows_.size(); }

    // Reduce v against the basis; returns residual and (optionally) the set of
    // inserted-row ids that were XORed into it.
    BitVec reduce(BitVec v, BitVec* combo = nullptr) const {
        if (combo) *combo = BitVec(n_inserted_);
        for (size_t i = 0; i < rows_.size(); i++) {
            if (v.get(pivots_[i])) {
                v ^= rows_[i];
                if (combo) *combo ^= resize_tag(tags_[i]);
            }
        }
        return v;
    }

    bool in_span(const BitVec& v) const { return reduce(v).none(); }

    // Insert a vector; returns true if it increased the rank.
    bool insert(const BitVec& v) {
        BitVec tag(n_inserted_ + 1);
        tag.set(n_inserted_, true);
        n_inserted_++;
        BitVec r = v;
        BitVec combo(n_inserted_);
        for (size_t i = 0; i < rows_.size(); i++) {
            if (r.get(pivots_[i])) {
                r ^= rows_[i];
                combo ^= resize_tag(tags_[i]);
            }
        }
        combo ^= resize_tag(tag);
        int p = r.lowest();
        if (p < 0) return false;
        // back-substitute to keep reduced echelon form
        for (size_t i = 0; i < rows_.size(); i++) {
            if (rows_[i].get(p)) {
                rows_[i] ^= r;
                tags_[i] = resize_tag(tags_[i]);
                tags_[i] ^= combo;
            }
        }
        rows_.push_back(r);
        tags_.push_back(combo);
        pivots_.push_back(p);
        // keep rows sorted by pivot for determinism
        for (size_t i = rows_.size() - 1; i > 0 && pivots_[i] < pivots_[i - 1]; i--) {
            std::swap(pivots_[i], pivots_[i - 1]);
            std::swap(rows_[i], rows_[i - 1]);
            std::swap(tags_[i], tags_[i - 1]);
        }
        return true;
    }

    // Combination of inserted vectors reproducing v, if v is in the span.
    bool express(const BitVec& v, BitVec* combo) const {
        BitVec r = reduce(v, combo);
        return r.none();
    }

    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    int inserted() const { return n_inserted_; }

private:
    BitVec resize_tag(const BitVec& t) const {
        if (t.n == n_inserted_) return t;
        BitVec out(n_inserted_);
        for (int i = 0; i < t.n; i++) if (t.get(i)) out.set(i, true);
        return out;
    }

    int cols_;
    int n_inserted_ = 0;
    std::vector<BitVec> rows_;
    std::vector<BitVec> tags_;
    std::vector<int> pivots_;
};

// Basis of the null space {x : <row_i, x> = 0 for all i}.
std::vector<BitVec> null_space(const std::vector<BitVec>& rows, int cols);

// Rank of a list of vectors.
int gf2_rank(const std::vector<BitVec>& rows, int cols);

} // namespace scqm

template <>
struct std::hash<scqm::BitVec> {
    size_t operator()(const scqm::BitVec& b) const { return (size_t)b.hash(); }
};
