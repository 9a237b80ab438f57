#pragma once

#include "scqm/bits.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scqm {

// n-qubit Pauli in symplectic form with a +/-1 sign.  The operator is
// sign * prod_i sigma(x_i, z_i) with sigma(1,1) = Y (Hermitian convention).
// Products with a +/-i global phase are rejected: every group handled here is
// generated by Hermitian CSS-type operators where such phases signal a bug.
struct Pauli {
    int n = 0;
    BitVec x, z;
    int sign = +1;

    Pauli() = default;
    explicit Pauli(int nq) : n(nq), x(nq), z(nq) {}

    static Pauli identity(int nq) { return Pauli(nq); }

    // "+XIZZY" style; sign prefix optional.
    static Pauli from_string(std::string_view s);
    std::string str() const;

    // little-endian packed x bits then z bits, with an n header
    std::vector<uint8_t> to_bytes() const;
    static Pauli from_bytes(std::span<const uint8_t> bytes);

    bool is_identity() const { return x.none() && z.none(); }
    int weight() const {
        int c = 0;
        for (int i = 0; i < x.words(); i++)
            c += __builtin_popcountll(x.w[i] | z.w[i]);
        return c;
    }
    std::vector<int> support() const {
        std::vector<int> out;
        for (int i = 0; i < n; i++)
            if (x.get(i) || z.get(i)) out.push_back(i);
        return out;
    }

    void mul_x(int q) { x.flip(q); }  // right-multiplication helpers ignoring sign
    void mul_z(int q) { z.flip(q); }

    bool operator==(const Pauli& o) const {
        return n == o.n && sign == o.sign && x == o.x && z == o.z;
    }

    uint64_t bits_hash() const {
        uint64_t h = x.hash();
        h ^= z.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

bool commutes(const Pauli& p, const Pauli& q);
Pauli multiply(const Pauli& p, const Pauli& q);

// CNOT with control c, target t (CHP sign rule).
void conj_cnot(Pauli& p, int c, int t);
// CZ on pair (a,b); X_a -> X_a Z_b, Z unchanged.
void conj_cz(Pauli& p, int a, int b);

struct LogicalPair {
    Pauli X, Z;
};

// A Pauli group given by generators.  Membership and rank are computed on the
// (x|z) bit matrix; signs are checked by multiplying the combination out.
class PauliGroup {
public:
    PauliGroup() = default;
    explicit PauliGroup(int nq) : n_(nq), basis_(2 * nq) {}
    PauliGroup(int nq, std::vector<Pauli> gens) : PauliGroup(nq) {
        for (auto& g : gens) add_generator(g);
    }

    int n() const { return n_; }
    void add_generator(const Pauli& p) {
        if (p.n != n_) throw std::invalid_argument("qubit count mismatch");
        gens_.push_back(p);
        basis_.insert(symplectic_row(p));
    }
    const std::vector<Pauli>& generators() const { return gens_; }
    int rank() const { return basis_.rank(); }

    bool is_abelian() const;

    // Membership up to sign.
    bool contains_up_to_sign(const Pauli& p) const {
        return basis_.in_span(symplectic_row(p));
    }
    // Membership with sign: finds a generator combination and compares signs.
    // Returns the combination over generators if requested.
    bool contains(const Pauli& p, BitVec* combo = nullptr) const;

    // Product of the generator subset selected by `combo`.
    Pauli combination(const BitVec& combo) const;

    BitVec symplectic_row(const Pauli& p) const {
        BitVec r(2 * n_);
        for (int i = 0; i < n_; i++) {
            if (p.x.get(i)) r.set(i, true);
            if (p.z.get(i)) r.set(n_ + i, true);
        }
        return r;
    }

private:
    int n_ = 0;
    std::vector<Pauli> gens_;
    Gf2Basis basis_{0};
};

// Generating set of all Paulis (up to sign) commuting with every generator of
// `g`, optionally restricted to a qubit subset.  Kernel of the symplectic
// pairing matrix.
PauliGroup centralizer(const PauliGroup& g,
                       const std::vector<int>* restrict_support = nullptr);

// Anticommuting logical pairs of an abelian stabilizer group (-1 not in S).
// Returns k = n - rank(S) pairs; each pair anticommutes internally, commutes
// with the other pairs and with S.
std::vector<LogicalPair> logical_operators(const PauliGroup& stabilizer);

} // namespace scqm
