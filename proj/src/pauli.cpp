#include "scqm/pauli.hpp"

#include <algorithm>
#include <cassert>

namespace scqm {

std::vector<BitVec> null_space(const std::vector<BitVec>& rows, int cols) {
    std::vector<BitVec> R = rows;
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int c = 0; c < cols && r < R.size(); c++) {
        size_t sel = r;
        while (sel < R.size() && !R[sel].get(c)) sel++;
        if (sel == R.size()) continue;
        std::swap(R[sel], R[r]);
        for (size_t j = 0; j < R.size(); j++)
            if (j != r && R[j].get(c)) R[j] ^= R[r];
        pivot_col.push_back(c);
        r++;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<BitVec> out;
    for (int f = 0; f < cols; f++) {
        if (is_pivot[f]) continue;
        BitVec v(cols);
        v.set(f, true);
        for (size_t k = 0; k < pivot_col.size(); k++)
            if (R[k].get(f)) v.set(pivot_col[k], true);
        out.push_back(v);
    }
    return out;
}

int gf2_rank(const std::vector<BitVec>& rows, int cols) {
    Gf2Basis b(cols);
    for (const auto& r : rows) b.insert(r);
    return b.rank();
}

Pauli Pauli::from_string(std::string_view s) {
    int sign = +1;
    size_t i = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        sign = s[0] == '-' ? -1 : +1;
        i = 1;
    }
    Pauli p((int)(s.size() - i));
    p.sign = sign;
    for (int q = 0; i < s.size(); i++, q++) {
        switch (s[i]) {
            case 'I': case '_': break;
            case 'X': p.x.set(q, true); break;
            case 'Z': p.z.set(q, true); break;
            case 'Y': p.x.set(q, true); p.z.set(q, true); break;
            default: throw std::invalid_argument("bad Pauli character");
        }
    }
    return p;
}

std::string Pauli::str() const {
    std::string s;
    s.reserve(n + 1);
    s.push_back(sign < 0 ? '-' : '+');
    for (int q = 0; q < n; q++) {
        bool xb = x.get(q), zb = z.get(q);
        s.push_back(xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
    }
    return s;
}

std::vector<uint8_t> Pauli::to_bytes() const {
    int nb = (n + 7) / 8;
    std::vector<uint8_t> out(4 + 2 * nb, 0);
    for (int i = 0; i < 4; i++) out[i] = (n >> (8 * i)) & 0xff;
    for (int q = 0; q < n; q++) {
        if (x.get(q)) out[4 + q / 8] |= 1u << (q % 8);
        if (z.get(q)) out[4 + nb + q / 8] |= 1u << (q % 8);
    }
    return out;
}

Pauli Pauli::from_bytes(std::span<const uint8_t> bytes) {
    if (bytes.size() < 4) throw std::invalid_argument("truncated Pauli blob");
    int n = 0;
    for (int i = 0; i < 4; i++) n |= (int)bytes[i] << (8 * i);
    int nb = (n + 7) / 8;
    if ((int)bytes.size() != 4 + 2 * nb) throw std::invalid_argument("bad Pauli blob size");
    Pauli p(n);
    for (int q = 0; q < n; q++) {
        if ((bytes[4 + q / 8] >> (q % 8)) & 1) p.x.set(q, true);
        if ((bytes[4 + nb + q / 8] >> (q % 8)) & 1) p.z.set(q, true);
    }
    return p;
}

bool commutes(const Pauli& p, const Pauli& q) {
    if (p.n != q.n) throw std::invalid_argument("qubit count mismatch");
    uint64_t acc = 0;
    for (int i = 0; i < p.x.words(); i++)
        acc ^= (p.x.w[i] & q.z.w[i]) ^ (p.z.w[i] & q.x.w[i]);
    return (__builtin_popcountll(acc) & 1) == 0;
}

Pauli multiply(const Pauli& p, const Pauli& q) {
    if (p.n != q.n) throw std::invalid_argument("qubit count mismatch");
    auto ny = [](const Pauli& a) {
        int c = 0;
        for (int i = 0; i < a.x.words(); i++)
            c += __builtin_popcountll(a.x.w[i] & a.z.w[i]);
        return c;
    };
    int cross = 0;
    for (int i = 0; i < p.x.words(); i++)
        cross += __builtin_popcountll(p.z.w[i] & q.x.w[i]);
    // phases tracked as powers of i on the X^x Z^z normal form
    int s = (ny(p) + 2 * (p.sign < 0) + ny(q) + 2 * (q.sign < 0) + 2 * cross) % 4;
    Pauli out(p.n);
    out.x = p.x ^ q.x;
    out.z = p.z ^ q.z;
    int t = ((s - ny(out)) % 4 + 4) % 4;
    if (t == 1 || t == 3)
        throw std::domain_error("Pauli product has imaginary phase (operands anticommute)");
    out.sign = t == 0 ? +1 : -1;
    return out;
}

void conj_cnot(Pauli& p, int c, int t) {
    bool xc = p.x.get(c), zc = p.z.get(c), xt = p.x.get(t), zt = p.z.get(t);
    if (xc && zt && (xt == zc)) p.sign = -p.sign;  // CHP phase rule
    p.x.set(t, xt ^ xc);
    p.z.set(c, zc ^ zt);
}

void conj_cz(Pauli& p, int a, int b) {
    bool xa = p.x.get(a), za = p.z.get(a), xb = p.x.get(b), zb = p.z.get(b);
    if (xa && xb && (za ^ zb)) p.sign = -p.sign;
    p.z.set(a, za ^ xb);
    p.z.set(b, zb ^ xa);
}

bool PauliGroup::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); i++)
        for (size_t j = i + 1; j < gens_.size(); j++)
            if (!commutes(gens_[i], gens_[j])) return false;
    return true;
}

bool PauliGroup::contains(const Pauli& p, BitVec* combo) const {
    BitVec c;
    if (!basis_.express(symplectic_row(p), &c)) return false;
    if (combo) *combo = c;
    return true;
}

Pauli PauliGroup::combination(const BitVec& combo) const {
    Pauli acc = Pauli::identity(n_);
    for (int i = 0; i < combo.n; i++)
        if (combo.get(i)) acc = multiply(acc, gens_[i]);
    return acc;
}

PauliGroup centralizer(const PauliGroup& g, const std::vector<int>* restrict_support) {
    int n = g.n();
    std::vector<int> support;
    if (restrict_support) {
        support = *restrict_support;
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
    } else {
        support.resize(n);
        for (int i = 0; i < n; i++) support[i] = i;
    }
    int m = (int)support.size();
    // variables: x-part then z-part of a Pauli on `support`
    std::vector<BitVec> rows;
    rows.reserve(g.generators().size());
    for (const auto& gen : g.generators()) {
        BitVec row(2 * m);
        bool nonzero = false;
        for (int j = 0; j < m; j++) {
            int q = support[j];
            if (gen.z.get(q)) { row.set(j, true); nonzero = true; }
            if (gen.x.get(q)) { row.set(m + j, true); nonzero = true; }
        }
        if (nonzero) rows.push_back(row);
    }
    auto kernel = null_space(rows, 2 * m);
    PauliGroup out(n);
    for (const auto& v : kernel) {
        Pauli p(n);
        for (int j = 0; j < m; j++) {
            if (v.get(j)) p.x.set(support[j], true);
            if (v.get(m + j)) p.z.set(support[j], true);
        }
        out.add_generator(p);
    }
    return out;
}

std::vector<LogicalPair> logical_operators(const PauliGroup& stabilizer) {
    if (!stabilizer.is_abelian())
        throw std::invalid_argument("logical_operators: stabilizer group must be abelian");
    int n = stabilizer.n();
    PauliGroup cent = centralizer(stabilizer);
    // coset representatives of C(S)/S
    Gf2Basis quotient(2 * n);
    for (const auto& s : stabilizer.generators())
        quotient.insert(stabilizer.symplectic_row(s));
    std::vector<Pauli> reps;
    for (const auto& c : cent.generators())
        if (quotient.insert(stabilizer.symplectic_row(c))) reps.push_back(c);

    auto mul_bits = [](const Pauli& a, const Pauli& b) {
        Pauli r = a;
        r.x ^= b.x;
        r.z ^= b.z;
        r.sign = +1;
        return r;
    };

    std::vector<LogicalPair> pairs;
    std::vector<Pauli> pool = reps;
    while (!pool.empty()) {
        Pauli a = pool.front();
        pool.erase(pool.begin());
        int partner = -1;
        for (size_t i = 0; i < pool.size(); i++)
            if (!commutes(a, pool[i])) { partner = (int)i; break; }
        if (partner < 0)
            throw std::logic_error("logical_operators: symplectic pairing failed");
        Pauli b = pool[partner];
        pool.erase(pool.begin() + partner);
        for (auto& r : pool) {
            if (!commutes(r, b)) r = mul_bits(r, a);
            if (!commutes(r, a)) r = mul_bits(r, b);
        }
        a.sign = +1;
        b.sign = +1;
        pairs.push_back(LogicalPair{a, b});
    }
    return pairs;
}

} // namespace scqm
