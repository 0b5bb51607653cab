#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gsp6/integers.hpp"

namespace gsp6 {

using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Prime field F_p, elements as canonical residues in [0, p).
// ---------------------------------------------------------------------------

struct PrimeField {
    u64 p;

    explicit PrimeField(u64 modulus) : p(modulus) {
        if (p < 3 || !is_prime_u64(p))
            throw std::invalid_argument("PrimeField: modulus must be a prime >= 3");
    }

    using Elem = u64;

    u64 zero() const { return 0; }
    u64 one() const { return 1; }
    bool is_zero(u64 a) const { return a == 0; }
    bool eq(u64 a, u64 b) const { return a == b; }
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const { return a ? p - a : 0; }
    u64 mul(u64 a, u64 b) const { return mulmod_u64(a, b, p); }
    u64 pow(u64 a, u64 e) const { return powmod_u64(a, e, p); }
    u64 inv(u64 a) const {
        if (a == 0) throw std::domain_error("PrimeField::inv(0)");
        return pow(a, p - 2);
    }
    u64 from_int(const Int& v) const { return residue_u64(v, p); }
    u64 from_ll(long long v) const { return from_int(Int(v)); }
};

// ---------------------------------------------------------------------------
// Dense univariate polynomials over an arbitrary field K (coefficients
// low-to-high, trailing zeros stripped; empty vector = zero polynomial).
// ---------------------------------------------------------------------------

template <class K>
using PolyOf = std::vector<typename K::Elem>;

template <class K>
void poly_trim(const K& k, PolyOf<K>& a) {
    while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

template <class K>
int poly_deg(const PolyOf<K>& a) { return static_cast<int>(a.size()) - 1; }

template <class K>
PolyOf<K> poly_mul(const K& k, const PolyOf<K>& a, const PolyOf<K>& b) {
    if (a.empty() || b.empty()) return {};
    PolyOf<K> r(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    poly_trim(k, r);
    return r;
}

template <class K>
PolyOf<K> poly_add(const K& k, const PolyOf<K>& a, const PolyOf<K>& b) {
    PolyOf<K> r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
    poly_trim(k, r);
    return r;
}

/// Remainder of a by monic-or-invertible-lead b; also exposes the quotient.
template <class K>
std::pair<PolyOf<K>, PolyOf<K>> poly_divmod(const K& k, PolyOf<K> a, const PolyOf<K>& b) {
    if (b.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    auto lcinv = k.inv(b.back());
    PolyOf<K> q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, k.zero());
    while (a.size() >= b.size() && !a.empty()) {
        auto f = k.mul(a.back(), lcinv);
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = k.sub(a[i + shift], k.mul(f, b[i]));
        poly_trim(k, a);
    }
    poly_trim(k, q);
    return {q, a};
}

template <class K>
PolyOf<K> poly_rem(const K& k, PolyOf<K> a, const PolyOf<K>& b) {
    return poly_divmod(k, std::move(a), b).second;
}

/// Monic gcd.
template <class K>
PolyOf<K> poly_gcd(const K& k, PolyOf<K> a, PolyOf<K> b) {
    poly_trim(k, a);
    poly_trim(k, b);
    while (!b.empty()) {
        auto r = poly_rem(k, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !k.eq(a.back(), k.one())) {
        auto f = k.inv(a.back());
        for (auto& c : a) c = k.mul(c, f);
    }
    return a;
}

/// Formal derivative; `charac` is the field characteristic.
template <class K>
PolyOf<K> poly_deriv(const K& k, const PolyOf<K>& a, u64 charac) {
    PolyOf<K> r;
    for (std::size_t i = 1; i < a.size(); ++i) {
        u64 m = static_cast<u64>(i) % charac;
        typename K::Elem c = k.zero();
        for (u64 t = 0; t < m; ++t) c = k.add(c, a[i]);
        r.push_back(c);
    }
    poly_trim(k, r);
    return r;
}

/// x^e mod m by repeated squaring (m of degree >= 1).
template <class K>
PolyOf<K> poly_powmod_x(const K& k, const Int& e, const PolyOf<K>& m) {
    PolyOf<K> result{k.one()};
    PolyOf<K> base = poly_rem(k, PolyOf<K>{k.zero(), k.one()}, m);
    Int n = e;
    while (n > 0) {
        if ((n & 1) != 0) result = poly_rem(k, poly_mul(k, result, base), m);
        base = poly_rem(k, poly_mul(k, base, base), m);
        n >>= 1;
    }
    return result;
}

template <class K>
bool poly_is_squarefree(const K& k, const PolyOf<K>& a, u64 charac) {
    auto d = poly_deriv(k, a, charac);
    if (d.empty()) return poly_deg(a) <= 0;
    return poly_gcd(k, a, d).size() == 1;
}

// ---------------------------------------------------------------------------
// Extension field F_{q^r}, r in {1,2,3}.  The modulus polynomial is the
// lexicographically smallest monic irreducible of degree r ((c_{r-1},..,c_0)
// ascending), so all derived counts are reproducible bit-for-bit.
// ---------------------------------------------------------------------------

struct ExtField {
    PrimeField base;
    int r;
    std::array<u64, 3> mod;    // low coefficients of the monic modulus
    Int card;

    using Elem = std::array<u64, 3>;

    // reduction rows: images of X^r and X^{r+1}, plus X^{r+2} for r=3 squaring
    std::array<u64, 3> red0{}, red1{};

    ExtField(u64 q, int degree) : base(q), r(degree), mod{} {
        if (r < 1 || r > 3) throw std::invalid_argument("ExtField: degree must be 1, 2 or 3");
        pick_modulus();
        card = 1;
        for (int i = 0; i < r; ++i) card *= q;
        if (r >= 2) {
            for (int i = 0; i < r; ++i) red0[i] = base.neg(mod[i]);   // X^r
            // X^{r+1} = X * X^r reduced
            red1 = shift_reduce(red0);
        }
    }

    bool operator==(const ExtField& o) const {
        return base.p == o.base.p && r == o.r && mod == o.mod;
    }

    Elem zero() const { return {0, 0, 0}; }
    Elem one() const { return {1, 0, 0}; }
    Elem from_base(u64 a) const { return {a % base.p, 0, 0}; }
    bool is_zero(const Elem& a) const { return a[0] == 0 && a[1] == 0 && a[2] == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const {
        return {base.add(a[0], b[0]), base.add(a[1], b[1]), base.add(a[2], b[2])};
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return {base.sub(a[0], b[0]), base.sub(a[1], b[1]), base.sub(a[2], b[2])};
    }
    Elem neg(const Elem& a) const { return {base.neg(a[0]), base.neg(a[1]), base.neg(a[2])}; }

    Elem mul(const Elem& a, const Elem& b) const {
        const u64 p = base.p;
        if (r == 1) return {mulmod_u64(a[0], b[0], p), 0, 0};
        using u128 = unsigned __int128;
        if (r == 2) {
            u128 d0 = (u128)a[0] * b[0];
            u128 d1 = (u128)a[0] * b[1] + (u128)a[1] * b[0];
            u128 d2 = (u128)a[1] * b[1];
            u64 e2 = (u64)(d2 % p);
            u64 c0 = (u64)((d0 + (u128)e2 * red0[0]) % p);
            u64 c1 = (u64)((d1 + (u128)e2 * red0[1]) % p);
            return {c0, c1, 0};
        }
        u128 d0 = (u128)a[0] * b[0];
        u128 d1 = (u128)a[0] * b[1] + (u128)a[1] * b[0];
        u128 d2 = (u128)a[0] * b[2] + (u128)a[1] * b[1] + (u128)a[2] * b[0];
        u128 d3 = (u128)a[1] * b[2] + (u128)a[2] * b[1];
        u128 d4 = (u128)a[2] * b[2];
        u64 e3 = (u64)(d3 % p), e4 = (u64)(d4 % p);
        u64 c0 = (u64)((d0 + (u128)e3 * red0[0] + (u128)e4 * red1[0]) % p);
        u64 c1 = (u64)((d1 + (u128)e3 * red0[1] + (u128)e4 * red1[1]) % p);
        u64 c2 = (u64)((d2 + (u128)e3 * red0[2] + (u128)e4 * red1[2]) % p);
        return {c0, c1, c2};
    }

    Elem pow(Elem a, Int e) const {
        Elem result = one();
        while (e > 0) {
            if ((e & 1) != 0) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("ExtField::inv(0)");
        return pow(a, card - 2);
    }

    /// Index of an element in [0, q^r): sum a_i q^i.
    u64 encode(const Elem& a) const {
        return a[0] + base.p * (a[1] + base.p * a[2]);
    }
    Elem decode(u64 idx) const {
        u64 q = base.p;
        return {idx % q, (idx / q) % q, idx / (q * q)};
    }

private:
    Elem shift_reduce(const Elem& a) const {
        // X * a reduced mod the modulus (degree r)
        std::array<u64, 4> t{0, a[0], a[1], a[2]};
        Elem out{t[0], t[1], t[2]};
        if (r == 2) {
            u64 hi = t[2];
            out = {base.add(t[0], base.mul(hi, red0[0])), base.add(t[1], base.mul(hi, red0[1])), 0};
        } else {
            u64 hi = t[3];
            out = {base.add(t[0], base.mul(hi, red0[0])),
                   base.add(t[1], base.mul(hi, red0[1])),
                   base.add(t[2], base.mul(hi, red0[2]))};
        }
        return out;
    }

    void pick_modulus() {
        u64 q = base.p;
        if (r == 1) { mod = {0, 0, 0}; return; }   // modulus X
        if (r == 2) {
            for (u64 c1 = 0; c1 < q; ++c1)
                for (u64 c0 = 0; c0 < q; ++c0) {
                    // X^2 + c1 X + c0 irreducible iff disc = c1^2 - 4 c0 is a non-residue
                    Int disc = Int(c1) * c1 - 4 * Int(c0);
                    if (legendre(disc, q) == -1) { mod = {c0, c1, 0}; return; }
                }
            throw std::logic_error("no irreducible quadratic found");
        }
        for (u64 c2 = 0; c2 < q; ++c2)
            for (u64 c1 = 0; c1 < q; ++c1)
                for (u64 c0 = 1; c0 < q; ++c0) {
                    bool has_root = false;
                    for (u64 x = 0; x < q && !has_root; ++x) {
                        u64 v = base.add(base.mul(base.add(base.mul(base.add(x, c2), x), c1), x), c0);
                        has_root = (v == 0);
                    }
                    if (!has_root) { mod = {c0, c1, c2}; return; }
                }
        throw std::logic_error("no irreducible cubic found");
    }
};

/// Deterministic construction of F_{q^r} (spec operation).
inline ExtField ext_field_build(u64 q, int r) { return ExtField(q, r); }

/// Quadratic character of K: 0 on 0, else x^{(|K|-1)/2} mapped to +-1.
inline int quad_char(const ExtField& k, const ExtField::Elem& x) {
    if (k.is_zero(x)) return 0;
    auto v = k.pow(x, (k.card - 1) / 2);
    return k.eq(v, k.one()) ? 1 : -1;
}

/// Number of distinct roots of p in K, via deg gcd(p, X^{|K|} - X).
template <class K>
int count_roots(const K& k, const PolyOf<K>& p, const Int& card) {
    if (p.empty()) throw std::invalid_argument("count_roots: zero polynomial");
    if (poly_deg(p) == 0) return 0;
    auto xq = poly_powmod_x(k, card, p);
    // xq - x
    PolyOf<K> sub = xq;
    if (sub.size() < 2) sub.resize(2, k.zero());
    sub[1] = k.sub(sub[1], k.one());
    poly_trim(k, sub);
    if (sub.empty()) return poly_deg(p);   // X^{|K|} = X mod p: all factors linear & distinct
    return poly_deg(poly_gcd(k, p, sub));
}

inline int count_roots(const ExtField& k, const PolyOf<ExtField>& p) {
    return count_roots(k, p, k.card);
}

// ---------------------------------------------------------------------------
// Quotient field F_q[t]/(m) for irreducible m of arbitrary small degree.
// Used by the plane-quartic smoothness decision, where singular points can
// live in extensions of degree up to 9.
// ---------------------------------------------------------------------------

struct QuotField {
    PrimeField base;
    std::vector<u64> mod;   // monic, low-to-high, degree >= 1
    Int card;

    using Elem = std::vector<u64>;   // degree < deg(mod), trailing zeros trimmed

    QuotField(const PrimeField& f, std::vector<u64> modulus) : base(f), mod(std::move(modulus)) {
        card = 1;
        for (int i = 0; i < static_cast<int>(mod.size()) - 1; ++i) card *= base.p;
    }

    Elem zero() const { return {}; }
    Elem one() const { return {1}; }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem from_base(u64 a) const {
        a %= base.p;
        return a ? Elem{a} : Elem{};
    }

    Elem add(const Elem& a, const Elem& b) const { return poly_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem nb = b;
        for (auto& c : nb) c = base.neg(c);
        return poly_add(base, a, nb);
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& c : r) c = base.neg(c);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        return poly_rem(base, poly_mul(base, a, b), mod);
    }
    Elem pow(Elem a, Int e) const {
        Elem result = one();
        while (e > 0) {
            if ((e & 1) != 0) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }
    Elem inv(const Elem& a) const {
        if (a.empty()) throw std::domain_error("QuotField::inv(0)");
        return pow(a, card - 2);
    }
};

}  // namespace gsp6
