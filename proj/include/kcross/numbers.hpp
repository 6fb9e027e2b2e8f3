#pragma once

#include <cstdint>
#include <vector>

#include "kcross/bignat.hpp"
#include "kcross/error.hpp"
#include "kcross/polynomial.hpp"

namespace kcross {

// Exact combinatorial numbers. Every function is pure and overflow-free;
// values are recomputed on demand (the arguments stay desk-scale).

inline BigNat binomial(int n, int k) {
    if (n < 0) throw validation_error("binomial: negative n");
    if (k < 0 || k > n) return {};
    if (k > n - k) k = n - k;
    BigNat r(1);
    for (int i = 1; i <= k; ++i) {
        r.mul_small(static_cast<std::uint32_t>(n - k + i));
        std::uint32_t rem = r.div_small(static_cast<std::uint32_t>(i));
        check_internal(rem == 0, "binomial: inexact intermediate division");
    }
    return r;
}

inline BigNat catalan(int n) {
    if (n < 0) throw validation_error("catalan: negative n");
    BigNat r = binomial(2 * n, n);
    std::uint32_t rem = r.div_small(static_cast<std::uint32_t>(n + 1));
    check_internal(rem == 0, "catalan: inexact division");
    return r;
}

// M_n = sum over i of C(n,2i) * C_i.
inline BigNat motzkin(int n) {
    if (n < 0) throw validation_error("motzkin: negative n");
    BigNat r;
    for (int i = 0; 2 * i <= n; ++i) r += binomial(n, 2 * i) * catalan(i);
    return r;
}

inline BigNat bell(int n) {
    if (n < 0) throw validation_error("bell: negative n");
    std::vector<BigNat> row{BigNat(1)};
    for (int i = 0; i < n; ++i) {
        std::vector<BigNat> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const auto& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

inline BigNat stirling2(int a, int b) {
    if (a < 0 || b < 0) throw validation_error("stirling2: negative argument");
    if (b > a) return {};
    if (a == 0) return BigNat(1);  // S(0,0) = 1
    if (b == 0) return {};
    // S(a,b) = b*S(a-1,b) + S(a-1,b-1)
    std::vector<BigNat> row(static_cast<std::size_t>(b) + 1);
    row[0] = BigNat(1);  // row for a = 0
    for (int i = 1; i <= a; ++i) {
        for (int j = std::min(i, b); j >= 1; --j) {
            BigNat v = row[static_cast<std::size_t>(j)];
            v.mul_small(static_cast<std::uint32_t>(j));
            row[static_cast<std::size_t>(j)] = v + row[static_cast<std::size_t>(j) - 1];
        }
        row[0] = {};
    }
    return row[static_cast<std::size_t>(b)];
}

// gamma_{m,i} = C(m-1, 2i) * C_i, the gamma-expansion coefficients of the
// Narayana polynomial C_m(t).
inline BigNat gamma_coeff(int m, int i) {
    if (m < 1 || i < 0) throw validation_error("gamma_coeff: arguments out of range");
    return binomial(m - 1, 2 * i) * catalan(i);
}

inline Polynomial Polynomial::one_plus_t_pow(int m) {
    if (m < 0) throw validation_error("polynomial: negative exponent");
    std::vector<BigNat> c;
    c.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) c.push_back(binomial(m, j));
    return Polynomial(std::move(c));
}

}  // namespace kcross
