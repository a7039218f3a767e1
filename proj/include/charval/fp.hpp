#pragma once

#include <cstdint>
#include <vector>

#include "charval/errors.hpp"

namespace charval {

// Arithmetic and dense linear algebra over F_p for p < 2^31. Enough for the
// class-algebra eigenvector computations; all sizes are desk scale.

using u64 = std::uint64_t;
using FpRow = std::vector<u64>;
using FpMat = std::vector<FpRow>;

inline u64 fp_mul(u64 a, u64 b, u64 p) { return a * b % p; }

inline u64 fp_add(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 fp_sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 fp_pow(u64 a, u64 k, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (k) {
        if (k & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        k >>= 1;
    }
    return r;
}

inline u64 fp_inv(u64 a, u64 p) {
    if (a % p == 0) throw Error("fp_inv: zero is not invertible");
    return fp_pow(a, p - 2, p);
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline FpMat fp_identity(int n) {
    FpMat m(n, FpRow(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline FpMat fp_mat_mul(const FpMat& a, const FpMat& b, u64 p) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = k ? static_cast<int>(b[0].size()) : 0;
    FpMat r(n, FpRow(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            u64 x = a[i][t];
            if (!x) continue;
            for (int j = 0; j < m; ++j) r[i][j] = (r[i][j] + x * b[t][j]) % p;
        }
    return r;
}

/// In-place reduced row echelon form; returns the pivot column list.
inline std::vector<int> fp_rref(FpMat& m, u64 p) {
    std::vector<int> pivots;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        u64 inv = fp_inv(m[rank][c], p);
        for (int j = c; j < cols; ++j) m[rank][j] = fp_mul(m[rank][j], inv, p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || !m[r][c]) continue;
            u64 f = m[r][c];
            for (int j = c; j < cols; ++j)
                m[r][j] = fp_sub(m[r][j], fp_mul(f, m[rank][j], p), p);
        }
        pivots.push_back(c);
        ++rank;
    }
    m.resize(rank);
    return pivots;
}

/// Basis of the right null space {v : M v = 0}, one vector per row.
inline FpMat fp_nullspace(FpMat m, u64 p) {
    int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    std::vector<int> pivots = fp_rref(m, p);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    FpMat basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        FpRow v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fp_sub(0, m[r][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Characteristic polynomial det(xI - M), monic, via Hessenberg reduction.
/// Valid over any prime field (no divisions by integers).
inline std::vector<u64> fp_charpoly(FpMat h, u64 p) {
    const int n = static_cast<int>(h.size());
    // similarity reduction to upper Hessenberg with column pivoting
    for (int c = 0; c + 2 < n; ++c) {
        int pivot = -1;
        for (int r = c + 1; r < n; ++r)
            if (h[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != c + 1) {
            std::swap(h[pivot], h[c + 1]);
            for (int r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][c + 1]);
        }
        u64 inv = fp_inv(h[c + 1][c], p);
        for (int r = c + 2; r < n; ++r) {
            if (!h[r][c]) continue;
            u64 f = fp_mul(h[r][c], inv, p);
            for (int j = 0; j < n; ++j) h[r][j] = fp_sub(h[r][j], fp_mul(f, h[c + 1][j], p), p);
            for (int i = 0; i < n; ++i) h[i][c + 1] = fp_add(h[i][c + 1], fp_mul(f, h[i][r], p), p);
        }
    }

    // p_k = charpoly of leading k x k block of the Hessenberg matrix
    std::vector<std::vector<u64>> cp(n + 1);
    cp[0] = {1};
    for (int k = 1; k <= n; ++k) {
        std::vector<u64> pk(k + 1, 0);
        // (x - h[k-1][k-1]) * cp[k-1]
        for (int i = 0; i < k; ++i) {
            pk[i + 1] = fp_add(pk[i + 1], cp[k - 1][i], p);
            pk[i] = fp_sub(pk[i], fp_mul(h[k - 1][k - 1], cp[k - 1][i], p), p);
        }
        u64 subprod = 1;
        for (int m = 1; m < k; ++m) {
            subprod = fp_mul(subprod, h[k - m][k - m - 1], p);
            if (!subprod) break;
            u64 coeff = fp_mul(h[k - 1 - m][k - 1], subprod, p);
            if (!coeff) continue;
            for (int i = 0; i <= k - 1 - m; ++i)
                pk[i] = fp_sub(pk[i], fp_mul(coeff, cp[k - 1 - m][i], p), p);
        }
        cp[k] = std::move(pk);
    }
    return cp[n];
}

inline u64 fp_poly_eval(const std::vector<u64>& poly, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
    return acc;
}

/// All roots in F_p by direct scan (p stays small at desk scale).
inline std::vector<u64> fp_poly_roots(const std::vector<u64>& poly, u64 p) {
    std::vector<u64> roots;
    for (u64 x = 0; x < p; ++x)
        if (fp_poly_eval(poly, x, p) == 0) roots.push_back(x);
    return roots;
}

inline std::vector<u64> factor_distinct_primes(u64 n) {
    std::vector<u64> primes;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        primes.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

inline u64 fp_primitive_root(u64 p) {
    auto qs = factor_distinct_primes(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : qs)
            if (fp_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no primitive root found (p not prime?)");
}

}  // namespace charval
