#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charval/errors.hpp"

namespace charval {

/// A permutation of {0..d-1} as an image array: p maps x to p[x].
using Perm = std::vector<int>;

/// Composition applies the right factor first: (p*q)(x) = p[q[x]].
inline Perm compose(const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
    return r;
}

inline Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
    return r;
}

inline Perm identity_perm(int degree) {
    Perm r(degree);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

/// Order of a permutation: lcm of its cycle lengths.
inline long perm_order(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    long ord = 1;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        long len = 0;
        for (std::size_t x = s; !seen[x]; x = p[x]) {
            seen[x] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

inline bool is_valid_permutation(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree) return false;
    std::vector<char> hit(degree, 0);
    for (int v : p) {
        if (v < 0 || v >= degree || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : p) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

enum class Origin { Family, Catalog, Closure };

inline const char* origin_name(Origin o) {
    switch (o) {
        case Origin::Family: return "family";
        case Origin::Catalog: return "catalog";
        default: return "closure";
    }
}

constexpr int kDefaultOrderCap = 10000;

/// A fully enumerated finite group, held as a faithful permutation group.
/// Element 0 is always the identity; the element list order is fixed by
/// the constructor and is part of the group's canonical indexing.
class FiniteGroup {
public:
    FiniteGroup(int degree, std::vector<Perm> elements, std::vector<int> generators,
                std::string name, Origin origin)
        : degree_(degree),
          elems_(std::move(elements)),
          gens_(std::move(generators)),
          name_(std::move(name)),
          origin_(origin) {
        if (degree_ < 1) throw InvalidPermutation("degree must be >= 1");
        if (elems_.empty() || elems_[0] != identity_perm(degree_))
            throw Error("element 0 must be the identity");
        index_.reserve(elems_.size() * 2);
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (!is_valid_permutation(elems_[i], degree_))
                throw InvalidPermutation("element " + std::to_string(i) + " is not a permutation");
            if (!index_.emplace(elems_[i], static_cast<int>(i)).second)
                throw Error("duplicate element at index " + std::to_string(i));
        }
        inv_.resize(elems_.size());
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            auto it = index_.find(inverse_perm(elems_[i]));
            if (it == index_.end()) throw Error("element set not closed under inverse");
            inv_[i] = it->second;
        }
        for (int g : gens_)
            if (g < 0 || g >= order()) throw Error("generator index out of range");
    }

    int order() const { return static_cast<int>(elems_.size()); }
    int degree() const { return degree_; }
    const std::string& name() const { return name_; }
    Origin origin() const { return origin_; }
    const std::vector<int>& generator_indices() const { return gens_; }
    const Perm& perm(int i) const { return elems_[i]; }

    int mul(int i, int j) const {
        const Perm& p = elems_[i];
        const Perm& q = elems_[j];
        thread_local Perm scratch;
        scratch.resize(degree_);
        for (int x = 0; x < degree_; ++x) scratch[x] = p[q[x]];
        auto it = index_.find(scratch);
        if (it == index_.end()) throw Error("element set not closed under product");
        return it->second;
    }

    int inv(int i) const { return inv_[i]; }

    /// g^-1 x g
    int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }

    /// Commutator [a,b] = a^-1 b^-1 a b.
    int commutator(int a, int b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }

    int element_order(int i) const { return static_cast<int>(perm_order(elems_[i])); }

    int pow(int i, long k) const {
        long n = element_order(i);
        k %= n;
        if (k < 0) k += n;
        int acc = 0, base = i;
        while (k > 0) {
            if (k & 1) acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    /// Index of a permutation, or -1 when it is not an element.
    int index_of(const Perm& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

private:
    int degree_;
    std::vector<Perm> elems_;
    std::unordered_map<Perm, int, PermHash> index_;
    std::vector<int> inv_;
    std::vector<int> gens_;
    std::string name_;
    Origin origin_;
};

/// Breadth-first closure of generator permutations. Elements are indexed in
/// lexicographic image-tuple order, which places the identity at index 0.
inline FiniteGroup close_permutations(int degree, const std::vector<Perm>& generators,
                                      int cap = kDefaultOrderCap, std::string name = "",
                                      Origin origin = Origin::Closure) {
    if (degree < 1) throw InvalidPermutation("degree must be >= 1, got " + std::to_string(degree));
    for (const Perm& g : generators)
        if (!is_valid_permutation(g, degree))
            throw InvalidPermutation("generator is not a bijection on {0.." +
                                     std::to_string(degree - 1) + "}");

    std::unordered_map<Perm, int, PermHash> seen;
    std::vector<Perm> elems;
    std::queue<int> todo;
    elems.push_back(identity_perm(degree));
    seen.emplace(elems[0], 0);
    todo.push(0);
    while (!todo.empty()) {
        Perm cur = elems[todo.front()];
        todo.pop();
        for (const Perm& g : generators) {
            Perm next = compose(cur, g);
            if (seen.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > cap)
                    throw ClosureExceedsCap("closure exceeds cap " + std::to_string(cap));
                todo.push(static_cast<int>(elems.size()) - 1);
            }
        }
    }

    std::sort(elems.begin(), elems.end());
    std::unordered_map<Perm, int, PermHash> rank;
    for (std::size_t i = 0; i < elems.size(); ++i) rank.emplace(elems[i], static_cast<int>(i));
    std::vector<int> gen_idx;
    gen_idx.reserve(generators.size());
    for (const Perm& g : generators) gen_idx.push_back(rank.at(g));
    return FiniteGroup(degree, std::move(elems), std::move(gen_idx), std::move(name), origin);
}

/// A subgroup as a sorted member-index set of its parent group.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;  // sorted
    bool is_normal = false;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }
};

/// Subgroup generated by the given element indices.
inline std::vector<int> closure_members(const FiniteGroup& G, std::vector<int> gens) {
    std::vector<char> in(G.order(), 0);
    in[0] = 1;
    std::vector<int> members{0};
    std::queue<int> todo;
    todo.push(0);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    while (!todo.empty()) {
        int a = todo.front();
        todo.pop();
        for (int s : gens) {
            int b = G.mul(a, s);
            if (!in[b]) {
                in[b] = 1;
                members.push_back(b);
                todo.push(b);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

inline bool is_normal_members(const FiniteGroup& G, const std::vector<int>& members) {
    std::vector<char> in(G.order(), 0);
    for (int m : members) in[m] = 1;
    for (int g : G.generator_indices())
        for (int m : members)
            if (!in[G.conj(m, g)]) return false;
    return true;
}

inline Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> members) {
    Subgroup s;
    s.parent = &G;
    s.members = std::move(members);
    s.is_normal = is_normal_members(G, s.members);
    return s;
}

inline Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
    return make_subgroup(G, closure_members(G, gens));
}

/// Smallest normal subgroup containing the seed elements.
inline Subgroup normal_closure(const FiniteGroup& G, std::vector<int> seed) {
    std::vector<int> members = closure_members(G, seed);
    for (;;) {
        std::vector<int> extra;
        std::vector<char> in(G.order(), 0);
        for (int m : members) in[m] = 1;
        for (int g : G.generator_indices())
            for (int m : members) {
                int c = G.conj(m, g);
                if (!in[c]) {
                    in[c] = 1;
                    extra.push_back(c);
                }
            }
        if (extra.empty()) break;
        members.insert(members.end(), extra.begin(), extra.end());
        members = closure_members(G, members);
    }
    Subgroup s;
    s.parent = &G;
    s.members = std::move(members);
    s.is_normal = true;
    return s;
}

inline Subgroup centralizer(const FiniteGroup& G, int x) {
    std::vector<int> members;
    for (int g = 0; g < G.order(); ++g)
        if (G.mul(g, x) == G.mul(x, g)) members.push_back(g);
    return make_subgroup(G, std::move(members));
}

inline Subgroup center(const FiniteGroup& G) {
    std::vector<int> members;
    for (int x = 0; x < G.order(); ++x) {
        bool central = true;
        for (int g : G.generator_indices())
            if (G.mul(x, g) != G.mul(g, x)) {
                central = false;
                break;
            }
        if (central) members.push_back(x);
    }
    Subgroup s;
    s.parent = &G;
    s.members = std::move(members);
    s.is_normal = true;
    return s;
}

inline bool is_abelian(const FiniteGroup& G) {
    const auto& gens = G.generator_indices();
    for (int a : gens)
        for (int b : gens)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

/// Derived subgroup: the normal closure of generator commutators equals the
/// closure of all commutators (mod it, the generators commute).
inline Subgroup derived_subgroup(const FiniteGroup& G) {
    std::vector<int> comms;
    for (int a : G.generator_indices())
        for (int b : G.generator_indices()) comms.push_back(G.commutator(a, b));
    return normal_closure(G, std::move(comms));
}

/// Derived subgroup of a member set, used by the solvability series.
inline std::vector<int> derived_members(const FiniteGroup& G, const std::vector<int>& members) {
    std::vector<char> in(G.order(), 0);
    std::vector<int> comms;
    for (int a : members)
        for (int b : members) {
            int c = G.commutator(a, b);
            if (!in[c]) {
                in[c] = 1;
                comms.push_back(c);
            }
        }
    return closure_members(G, comms);
}

inline bool is_solvable(const FiniteGroup& G) {
    std::vector<int> cur = derived_subgroup(G).members;
    for (;;) {
        if (cur.size() == 1) return true;
        std::vector<int> next = derived_members(G, cur);
        if (next.size() == cur.size()) return false;
        cur = std::move(next);
    }
}

inline long exponent(const FiniteGroup& G) {
    long e = 1;
    for (int x = 0; x < G.order(); ++x) e = std::lcm(e, static_cast<long>(G.element_order(x)));
    return e;
}

inline std::vector<int> element_orders(const FiniteGroup& G) {
    std::vector<int> orders(G.order());
    for (int x = 0; x < G.order(); ++x) orders[x] = G.element_order(x);
    std::sort(orders.begin(), orders.end());
    return orders;
}

/// Abelian with every non-identity element of order p. The trivial group
/// passes vacuously for any p.
inline bool is_elementary_abelian(const FiniteGroup& G, int p) {
    if (!is_abelian(G)) return false;
    for (int x = 1; x < G.order(); ++x)
        if (G.element_order(x) != p) return false;
    return true;
}

/// Largest normal subgroup of odd order, grown to a fixpoint by joining
/// normal closures of odd-order elements whenever the join stays odd.
inline Subgroup odd_core(const FiniteGroup& G) {
    std::vector<int> core{0};
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 1; x < G.order(); ++x) {
            if (G.element_order(x) % 2 == 0) continue;
            if (std::binary_search(core.begin(), core.end(), x)) continue;
            std::vector<int> seed = core;
            seed.push_back(x);
            Subgroup M = normal_closure(G, std::move(seed));
            if (M.order() % 2 == 1) {
                core = std::move(M.members);
                grew = true;
            }
        }
    }
    Subgroup s;
    s.parent = &G;
    s.members = std::move(core);
    s.is_normal = true;
    return s;
}

inline std::vector<int> normalizer_members(const FiniteGroup& G, const std::vector<int>& sub) {
    std::vector<char> in(G.order(), 0);
    for (int m : sub) in[m] = 1;
    std::vector<int> result;
    for (int g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (int m : sub)
            if (!in[G.conj(m, g)]) {
                ok = false;
                break;
            }
        if (ok) result.push_back(g);
    }
    return result;
}

/// One Sylow 2-subgroup, by greedy extension: while |P| is short of the
/// 2-part of |G|, the normalizer of P contains a 2-element outside P.
inline Subgroup sylow_two(const FiniteGroup& G) {
    int two_part = 1;
    for (int n = G.order(); n % 2 == 0; n /= 2) two_part *= 2;
    std::vector<int> P{0};
    while (static_cast<int>(P.size()) < two_part) {
        std::vector<int> N = normalizer_members(G, P);
        int pick = -1;
        for (int y : N) {
            int ord = G.element_order(y);
            int odd = ord;
            while (odd % 2 == 0) odd /= 2;
            int x = G.pow(y, odd);  // 2-part of y, still normalizes P
            if (x != 0 && !std::binary_search(P.begin(), P.end(), x)) {
                pick = x;
                break;
            }
        }
        if (pick < 0) throw Error("sylow_two: greedy extension stalled");
        std::vector<int> seed = P;
        seed.push_back(pick);
        P = closure_members(G, seed);
    }
    return make_subgroup(G, std::move(P));
}

/// True iff t (with t^2 = 1) inverts every element of N.
inline bool inverts_subgroup(const FiniteGroup& G, int t, const Subgroup& N) {
    if (G.mul(t, t) != 0)
        throw NotAnInvolution("inverts_subgroup: t^2 != 1 for t=" + std::to_string(t));
    for (int x : N.members)
        if (G.mul(G.mul(t, x), t) != G.inv(x)) return false;
    return true;
}

/// Quotient G/N as a permutation group on left cosets. Cosets are indexed
/// by ascending minimal representative; element k of the quotient is the
/// coset-permutation of left multiplication by the k-th representative.
inline FiniteGroup quotient(const FiniteGroup& G, const Subgroup& N) {
    if (N.members.empty() || N.members[0] != 0 || G.order() % N.order() != 0 ||
        !is_normal_members(G, N.members))
        throw NotNormal("quotient: subgroup is not normal");
    const int n = G.order();
    std::vector<int> coset_id(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_id[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int m : N.members) coset_id[G.mul(x, m)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<Perm> elems;
    elems.reserve(q);
    for (int k = 0; k < q; ++k) {
        Perm pi(q);
        for (int i = 0; i < q; ++i) pi[i] = coset_id[G.mul(reps[k], reps[i])];
        elems.push_back(std::move(pi));
    }
    std::vector<int> gen_idx;
    for (int g : G.generator_indices()) gen_idx.push_back(coset_id[g]);
    std::sort(gen_idx.begin(), gen_idx.end());
    gen_idx.erase(std::unique(gen_idx.begin(), gen_idx.end()), gen_idx.end());
    return FiniteGroup(q, std::move(elems), std::move(gen_idx),
                       G.name().empty() ? "" : G.name() + "/N", Origin::Closure);
}

}  // namespace charval
