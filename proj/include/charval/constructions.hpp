#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "charval/group.hpp"

namespace charval {

/// Cyclic factor list for an abelian group; order is the factor product.
struct AbelianSpec {
    std::vector<long> cyclic_factors;  // each >= 2

    long order() const {
        long n = 1;
        for (long f : cyclic_factors) n *= f;
        return n;
    }
};

namespace detail {

/// Prime-power decomposition n = q1*q2*... with the qi pairwise coprime.
inline std::vector<long> prime_power_parts(long n) {
    std::vector<long> parts;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        long q = 1;
        while (n % p == 0) {
            q *= p;
            n /= p;
        }
        parts.push_back(q);
    }
    if (n > 1) parts.push_back(n);
    return parts;
}

/// A disjoint product of cycles of the given lengths, starting at `offset`;
/// a single generator of order lcm(lengths).
inline void append_cycles(Perm& image, int offset, const std::vector<long>& lengths) {
    int base = offset;
    for (long len : lengths) {
        for (long s = 0; s < len; ++s)
            image[base + s] = base + static_cast<int>((s + 1) % len);
        base += static_cast<int>(len);
    }
}

inline void check_cap(long order, int cap, const std::string& what) {
    if (order > cap)
        throw OrderCapExceeded(what + ": order " + std::to_string(order) +
                               " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

inline FiniteGroup cyclic(long n, int cap = kDefaultOrderCap) {
    if (n < 1) throw Error("cyclic: n must be >= 1");
    detail::check_cap(n, cap, "cyclic");
    std::string name = "C" + std::to_string(n);
    if (n == 1) return close_permutations(1, {}, cap, name, Origin::Family);
    auto parts = detail::prime_power_parts(n);
    int degree = static_cast<int>(std::accumulate(parts.begin(), parts.end(), 0L));
    Perm gen(degree);
    detail::append_cycles(gen, 0, parts);
    FiniteGroup G = close_permutations(degree, {gen}, cap, name, Origin::Family);
    if (G.order() != n) throw Error("cyclic: closure sanity check failed");
    return G;
}

/// Direct product of cyclic groups; one generator per factor, acting on
/// disjoint point blocks (each factor split into coprime prime-power cycles).
inline FiniteGroup abelian(const AbelianSpec& spec, int cap = kDefaultOrderCap) {
    for (long f : spec.cyclic_factors)
        if (f < 2) throw Error("abelian: factors must be >= 2");
    long n = spec.order();
    detail::check_cap(n, cap, "abelian");
    if (spec.cyclic_factors.empty()) return cyclic(1, cap);

    std::string name;
    std::vector<std::vector<long>> parts;
    int degree = 0;
    for (long f : spec.cyclic_factors) {
        parts.push_back(detail::prime_power_parts(f));
        for (long q : parts.back()) degree += static_cast<int>(q);
        name += (name.empty() ? "" : "x") + std::string("C") + std::to_string(f);
    }
    std::vector<Perm> gens;
    int offset = 0;
    for (const auto& ps : parts) {
        Perm g = identity_perm(degree);
        detail::append_cycles(g, offset, ps);
        for (long q : ps) offset += static_cast<int>(q);
        gens.push_back(std::move(g));
    }
    FiniteGroup G = close_permutations(degree, gens, cap, name, Origin::Family);
    if (G.order() != n) throw Error("abelian: closure sanity check failed");
    return G;
}

inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                                  int cap = kDefaultOrderCap) {
    long n = static_cast<long>(G.order()) * H.order();
    detail::check_cap(n, cap, "direct_product");
    int degree = G.degree() + H.degree();
    std::vector<Perm> gens;
    for (int gi : G.generator_indices()) {
        Perm p = identity_perm(degree);
        for (int x = 0; x < G.degree(); ++x) p[x] = G.perm(gi)[x];
        gens.push_back(std::move(p));
    }
    for (int hi : H.generator_indices()) {
        Perm p = identity_perm(degree);
        for (int x = 0; x < H.degree(); ++x) p[G.degree() + x] = G.degree() + H.perm(hi)[x];
        gens.push_back(std::move(p));
    }
    FiniteGroup P = close_permutations(degree, gens, cap, G.name() + " x " + H.name(),
                                       Origin::Family);
    if (P.order() != n) throw Error("direct_product: closure sanity check failed");
    return P;
}

inline FiniteGroup symmetric(int n, int cap = kDefaultOrderCap) {
    if (n < 1 || n > 6) throw Error("symmetric: n must be in 1..6");
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    detail::check_cap(fact, cap, "symmetric");
    std::string name = "S" + std::to_string(n);
    if (n == 1) return close_permutations(1, {}, cap, name, Origin::Family);
    Perm cycle(n), swap01 = identity_perm(n);
    for (int x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
    swap01[0] = 1;
    swap01[1] = 0;
    std::vector<Perm> gens{swap01};
    if (n > 2) gens.push_back(cycle);
    FiniteGroup G = close_permutations(n, gens, cap, name, Origin::Family);
    if (G.order() != fact) throw Error("symmetric: closure sanity check failed");
    return G;
}

/// Dihedral group of order n (n even): symmetries of the (n/2)-gon.
inline FiniteGroup dihedral(long n, int cap = kDefaultOrderCap) {
    if (n < 2 || n % 2 != 0) throw Error("dihedral: order must be even and >= 2");
    detail::check_cap(n, cap, "dihedral");
    std::string name = "D" + std::to_string(n);
    long m = n / 2;
    std::vector<Perm> gens;
    int degree;
    if (m == 1) {
        degree = 2;
        gens.push_back({1, 0});
    } else if (m == 2) {
        degree = 4;
        gens.push_back({1, 0, 2, 3});
        gens.push_back({0, 1, 3, 2});
    } else {
        degree = static_cast<int>(m);
        Perm rot(degree), refl(degree);
        for (int x = 0; x < degree; ++x) {
            rot[x] = static_cast<int>((x + 1) % m);
            refl[x] = static_cast<int>((m - x) % m);
        }
        gens.push_back(std::move(rot));
        gens.push_back(std::move(refl));
    }
    FiniteGroup G = close_permutations(degree, gens, cap, name, Origin::Family);
    if (G.order() != n) throw Error("dihedral: closure sanity check failed");
    return G;
}

/// Quaternion group of order eight, as its left-regular action on
/// {1,-1,i,-i,j,-j,k,-k}.
inline FiniteGroup quaternion8(int cap = kDefaultOrderCap) {
    detail::check_cap(8, cap, "quaternion8");
    Perm left_i{2, 3, 1, 0, 6, 7, 5, 4};
    Perm left_j{4, 5, 7, 6, 1, 0, 2, 3};
    FiniteGroup G = close_permutations(8, {left_i, left_j}, cap, "Q8", Origin::Family);
    if (G.order() != 8) throw Error("quaternion8: closure sanity check failed");
    return G;
}

/// Generalized dihedral group Dih A on the point set A: pairs (a, e) with
/// (a,0)(b,e) = (ab,e) and (a,1)(b,e) = (a b^-1, 1-e). Elements are indexed
/// A-first: index(a, e) = e*|A| + index_A(a); t = (1,1) sits at index |A|.
inline FiniteGroup generalized_dihedral(const FiniteGroup& A, int cap = kDefaultOrderCap) {
    if (!is_abelian(A)) throw NotAbelian("generalized_dihedral: A must be abelian");
    if (is_elementary_abelian(A, 2))
        throw ElementaryAbelianTwo(
            "generalized_dihedral: A must not be an elementary abelian 2-group");
    long m = A.order();
    detail::check_cap(2 * m, cap, "generalized_dihedral");

    std::vector<Perm> elems;
    elems.reserve(2 * m);
    for (int eps = 0; eps <= 1; ++eps)
        for (int a = 0; a < m; ++a) {
            Perm p(m);
            for (int x = 0; x < m; ++x) p[x] = A.mul(a, eps ? A.inv(x) : x);
            elems.push_back(std::move(p));
        }
    std::vector<int> gens;
    for (int g : A.generator_indices()) gens.push_back(g);
    gens.push_back(static_cast<int>(m));  // t = (1, 1)
    return FiniteGroup(static_cast<int>(m), std::move(elems), std::move(gens),
                       "Dih(" + A.name() + ")", Origin::Family);
}

}  // namespace charval
