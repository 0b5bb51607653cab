#pragma once

#include <stdexcept>
#include <vector>

#include "gsp6/ff.hpp"
#include "gsp6/integers.hpp"

namespace gsp6 {

/// Dense integer polynomial, coefficients low-to-high, trailing zeros stripped.
using IntPoly = std::vector<Int>;

inline void ipoly_trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int ipoly_deg(const IntPoly& a) { return static_cast<int>(a.size()) - 1; }

inline IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    ipoly_trim(r);
    return r;
}

inline IntPoly ipoly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ipoly_trim(r);
    return r;
}

inline IntPoly ipoly_deriv(const IntPoly& a) {
    IntPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(Int(i) * a[i]);
    ipoly_trim(r);
    return r;
}

inline Int ipoly_eval(const IntPoly& a, const Int& x) {
    Int v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
    return v;
}

/// Determinant by fraction-free Bareiss elimination; exact over Int.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t / prev;   // exact by Bareiss
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Resultant Res(A, B) as the Sylvester determinant.
inline Int ipoly_resultant(IntPoly A, IntPoly B) {
    ipoly_trim(A);
    ipoly_trim(B);
    if (A.empty() || B.empty()) return 0;
    int da = ipoly_deg(A), db = ipoly_deg(B);
    if (da == 0 && db == 0) return 1;
    if (da == 0) {
        Int r = 1;
        for (int i = 0; i < db; ++i) r *= A[0];
        return r;
    }
    if (db == 0) {
        Int r = 1;
        for (int i = 0; i < da; ++i) r *= B[0];
        return r;
    }
    int n = da + db;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (int row = 0; row < db; ++row)
        for (int i = 0; i <= da; ++i)
            m[row][row + i] = A[da - i];
    for (int row = 0; row < da; ++row)
        for (int i = 0; i <= db; ++i)
            m[db + row][row + i] = B[db - i];
    return bareiss_det(std::move(m));
}

/// Discriminant with the convention disc = (-1)^{n(n-1)/2} Res(P, P') for monic P.
inline Int ipoly_disc(const IntPoly& p) {
    IntPoly q = p;
    ipoly_trim(q);
    if (ipoly_deg(q) < 1) throw std::invalid_argument("ipoly_disc: degree must be >= 1");
    if (q.back() != 1) throw std::invalid_argument("ipoly_disc: polynomial must be monic");
    int n = ipoly_deg(q);
    Int r = ipoly_resultant(q, ipoly_deriv(q));
    return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

/// Coefficientwise reduction mod ell (spec operation reduce_mod).
inline PolyOf<PrimeField> reduce_mod(const IntPoly& p, const PrimeField& f) {
    PolyOf<PrimeField> r;
    r.reserve(p.size());
    for (const auto& c : p) r.push_back(f.from_int(c));
    poly_trim(f, r);
    return r;
}

}  // namespace gsp6
