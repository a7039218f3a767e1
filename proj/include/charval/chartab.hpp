#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "charval/class_algebra.hpp"
#include "charval/conjugacy.hpp"
#include "charval/constructions.hpp"
#include "charval/cyclotomic.hpp"
#include "charval/fp.hpp"
#include "charval/group.hpp"

namespace charval {

/// Sparse root-of-unity decomposition of a character value: a list of
/// (exponent, coefficient) pairs meaning sum c * zeta_e^k. Kept alongside
/// the canonical form because exact orthogonality sums are much cheaper on
/// this shape.
using RootDecomp = std::vector<std::pair<long, long>>;

struct CharacterTable {
    std::string group_name;
    long group_order = 1;
    long exponent = 1;  // conductor of every value
    ConjugacyData classes;
    std::vector<int> degrees;                         // ascending
    std::vector<std::vector<Cyclotomic>> values;      // rows x classes
    std::vector<std::vector<RootDecomp>> decomp;      // same shape
    u64 prime = 0;  // modular prime used by the lifting algorithm, 0 if closed form
    u64 seed = 0;   // eigenspace-splitting seed

    int num_rows() const { return static_cast<int>(values.size()); }
    int num_classes() const { return classes.num_classes(); }
    long centralizer_order(int j) const { return group_order / classes.class_sizes[j]; }
};

struct OrthogonalityReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
};

namespace chartab_detail {

inline RootDecomp decomp_from_canonical(const Cyclotomic& v) {
    RootDecomp d;
    const auto& c = v.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) {
            if (!c[k].fits_slong_p()) throw Error("decomp_from_canonical: coefficient overflow");
            d.emplace_back(static_cast<long>(k), c[k].get_si());
        }
    return d;
}

/// Exact sum over an index range of products x_t * conj(y_t) * weight_t,
/// assembled in the raw exponent representation and canonicalized once.
class ExactDot {
public:
    explicit ExactDot(long e) : e_(e), acc_(e, mpz_class(0)) {}

    void clear() {
        for (auto& c : acc_) c = 0;
    }

    void add(const RootDecomp& x, const RootDecomp& y, long weight) {
        for (const auto& [k1, m1] : x)
            for (const auto& [k2, m2] : y) {
                long k = k1 - k2;
                if (k < 0) k += e_;
                acc_[k] += static_cast<long>(weight * m1) * m2;
            }
    }

    Cyclotomic take() {
        Cyclotomic v = Cyclotomic::from_exponent_vector(e_, acc_);
        clear();
        return v;
    }

private:
    long e_;
    std::vector<mpz_class> acc_;
};

inline bool value_is_one(const Cyclotomic& v) {
    auto n = v.as_rational_integer();
    return n.has_value() && *n == 1;
}

/// Row order: ascending degree; the constant-one value sorts before any
/// other value, which puts the principal character first.
inline bool row_precedes(const std::vector<Cyclotomic>& a, int deg_a,
                         const std::vector<Cyclotomic>& b, int deg_b) {
    if (deg_a != deg_b) return deg_a < deg_b;
    for (std::size_t j = 0; j < a.size(); ++j) {
        bool a1 = value_is_one(a[j]), b1 = value_is_one(b[j]);
        if (a1 != b1) return a1;
        if (!(a[j] == b[j])) return lex_less(a[j], b[j]);
    }
    return false;
}

inline void sort_rows_canonically(CharacterTable& table) {
    const int rows = table.num_rows();
    std::vector<int> order(rows);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return row_precedes(table.values[x], table.degrees[x], table.values[y],
                            table.degrees[y]);
    });
    CharacterTable sorted = table;
    for (int i = 0; i < rows; ++i) {
        sorted.degrees[i] = table.degrees[order[i]];
        sorted.values[i] = table.values[order[i]];
        sorted.decomp[i] = table.decomp[order[i]];
    }
    table = std::move(sorted);
}

}  // namespace chartab_detail

/// Exact verification of both orthogonality relations plus the structural
/// table invariants. Violations are report content, not exceptions.
inline OrthogonalityReport verify_orthogonality(const CharacterTable& T) {
    OrthogonalityReport report;
    const int r = T.num_classes();
    const long n = T.group_order;
    if (T.num_rows() != r) {
        report.fail("table is not square");
        return report;
    }

    long degree_square_sum = 0;
    for (int i = 0; i < T.num_rows(); ++i) {
        if (!(T.values[i][0] == Cyclotomic(T.degrees[i])))
            report.fail("row " + std::to_string(i) + ": identity column != degree");
        if (T.degrees[i] < 1 || n % T.degrees[i] != 0)
            report.fail("row " + std::to_string(i) + ": degree does not divide group order");
        degree_square_sum += static_cast<long>(T.degrees[i]) * T.degrees[i];
    }
    if (degree_square_sum != n) report.fail("sum of squared degrees != group order");
    for (int j = 0; j < r && T.num_rows() > 0; ++j)
        if (!chartab_detail::value_is_one(T.values[0][j])) {
            report.fail("first row is not the principal character");
            break;
        }

    chartab_detail::ExactDot dot(T.exponent);

    for (int i1 = 0; i1 < r; ++i1)
        for (int i2 = i1; i2 < r; ++i2) {
            for (int j = 0; j < r; ++j)
                dot.add(T.decomp[i1][j], T.decomp[i2][j], T.classes.class_sizes[j]);
            Cyclotomic got = dot.take();
            Cyclotomic expect = (i1 == i2) ? Cyclotomic(n) : Cyclotomic(0);
            if (!(got == expect))
                report.fail("row orthogonality failed for rows " + std::to_string(i1) + "," +
                            std::to_string(i2) + ": got " + got.to_string());
        }

    for (int j1 = 0; j1 < r; ++j1)
        for (int j2 = j1; j2 < r; ++j2) {
            for (int i = 0; i < r; ++i) dot.add(T.decomp[i][j1], T.decomp[i][j2], 1);
            Cyclotomic got = dot.take();
            Cyclotomic expect = (j1 == j2) ? Cyclotomic(T.centralizer_order(j1)) : Cyclotomic(0);
            if (!(got == expect))
                report.fail("column orthogonality failed for classes " + std::to_string(j1) +
                            "," + std::to_string(j2) + ": got " + got.to_string());
        }

    return report;
}

/// Smallest prime p = 1 (mod e) with p > max(e, 2 ceil(sqrt(n))), capped at 2^31.
inline u64 find_dixon_prime(long n, long e) {
    long root = 1;
    while (root * root < n) ++root;  // ceil(sqrt(n))
    u64 lower = std::max<u64>(e + 1, 2 * root + 1);
    u64 k = (lower - 1) / e;
    if (k * e + 1 < lower) ++k;
    for (;; ++k) {
        u64 p = k * static_cast<u64>(e) + 1;
        if (p >= (1ull << 31))
            throw NoSuitablePrime("no prime = 1 mod " + std::to_string(e) + " under 2^31");
        if (p >= lower && is_prime_u64(p)) return p;
    }
}

/// Exact character table by the modular lifting method: simultaneous
/// diagonalization of the class matrices over F_p followed by a Fourier
/// lift of eigenvalue multiplicities into Z[zeta_e], then a mandatory
/// exact orthogonality certificate.
inline CharacterTable dixon_schneider(const FiniteGroup& G, u64 seed = 0) {
    const long n = G.order();
    const long e = exponent(G);
    ConjugacyData classes = conjugacy_classes(G);
    const int r = classes.num_classes();
    const u64 p = find_dixon_prime(n, e);
    ClassMatrixData cm = class_matrices(G, classes);

    // transposed class matrices over F_p; row vectors act on the right
    std::vector<FpMat> T(r, FpMat(r, FpRow(r, 0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) T[i][k][j] = static_cast<u64>(cm.at(i, j, k) % static_cast<long>(p));

    // split the row space into common one-dimensional eigenspaces using
    // random linear combinations of the class matrices
    std::mt19937_64 rng(seed);
    std::vector<FpMat> spaces{fp_identity(r)};
    for (int round = 0; round < 500; ++round) {
        bool all_split = true;
        for (const auto& W : spaces)
            if (W.size() > 1) all_split = false;
        if (all_split) break;

        FpMat M(r, FpRow(r, 0));
        for (int i = 0; i < r; ++i) {
            u64 c = rng() % p;
            if (!c) continue;
            for (int x = 0; x < r; ++x)
                for (int y = 0; y < r; ++y) M[x][y] = (M[x][y] + c * T[i][x][y]) % p;
        }

        std::vector<FpMat> next;
        for (auto& W : spaces) {
            const int m = static_cast<int>(W.size());
            if (m == 1) {
                next.push_back(std::move(W));
                continue;
            }
            // bases are kept in reduced row echelon form, so coordinates of
            // an image vector are read off at the pivot columns
            std::vector<int> pivots = fp_rref(W, p);
            if (static_cast<int>(W.size()) != m)
                throw LiftInconsistent("eigenspace basis lost rank");
            FpMat Wp = fp_mat_mul(W, M, p);
            FpMat R(m, FpRow(m, 0));
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t) R[s][t] = Wp[s][pivots[t]];
            // invariance check: images must reconstruct exactly
            FpMat recon = fp_mat_mul(R, W, p);
            for (int s = 0; s < m; ++s)
                for (int j = 0; j < r; ++j)
                    if (recon[s][j] != Wp[s][j])
                        throw LiftInconsistent("subspace not invariant under class algebra");
            auto roots = fp_poly_roots(fp_charpoly(R, p), p);
            if (roots.size() <= 1) {
                next.push_back(std::move(W));
                continue;
            }
            for (u64 lam : roots) {
                FpMat shifted(m, FpRow(m, 0));
                for (int s = 0; s < m; ++s)
                    for (int t = 0; t < m; ++t)
                        shifted[t][s] = fp_sub(R[s][t], (s == t) ? lam : 0, p);
                FpMat kernel = fp_nullspace(shifted, p);  // rows x with x (R - lam I) = 0
                if (kernel.empty()) continue;
                FpMat sub = fp_mat_mul(kernel, W, p);
                fp_rref(sub, p);
                next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != r)
        throw LiftInconsistent("splitting did not reach " + std::to_string(r) +
                               " one-dimensional eigenspaces");

    // central characters: normalize each eigenvector at the identity class
    std::vector<FpRow> omega(r);
    for (int t = 0; t < r; ++t) {
        FpRow v = spaces[t][0];
        if (v[0] == 0) throw LiftInconsistent("eigenvector vanishes at the identity class");
        u64 scale = fp_inv(v[0], p);
        for (auto& x : v) x = fp_mul(x, scale, p);
        omega[t] = std::move(v);
    }

    // degrees from the orthogonality normalization: d^2 = n / sum_i w_i w_i* / h_i
    std::vector<u64> inv_size(r);
    for (int i = 0; i < r; ++i) inv_size[i] = fp_inv(classes.class_sizes[i] % p, p);
    std::vector<int> degrees(r);
    long degree_square_sum = 0;
    for (int t = 0; t < r; ++t) {
        u64 s = 0;
        for (int i = 0; i < r; ++i)
            s = (s + fp_mul(fp_mul(omega[t][i], omega[t][classes.inverse_class[i]], p),
                            inv_size[i], p)) %
                p;
        if (!s) throw LiftInconsistent("degree normalization sum vanished");
        u64 dsq = fp_mul(n % p, fp_inv(s, p), p);
        int d = 0;
        for (long c = 1; c * c <= n; ++c)
            if (static_cast<u64>(c) * c % p == dsq) {
                d = static_cast<int>(c);
                break;
            }
        if (!d) throw LiftInconsistent("no degree in (0, sqrt(n)] matches its residue");
        degrees[t] = d;
        degree_square_sum += static_cast<long>(d) * d;
    }
    if (degree_square_sum != n)
        throw LiftInconsistent("degrees do not satisfy the degree equation");

    // characters mod p
    std::vector<FpRow> chi(r, FpRow(r, 0));
    for (int t = 0; t < r; ++t)
        for (int i = 0; i < r; ++i)
            chi[t][i] = fp_mul(degrees[t] % p, fp_mul(omega[t][i], inv_size[i], p), p);

    // power map: class of rep_j^s
    std::vector<std::vector<int>> power_class(r, std::vector<int>(e));
    for (int j = 0; j < r; ++j) {
        int cur = 0;
        for (long s = 0; s < e; ++s) {
            power_class[j][s] = classes.class_of[cur];
            cur = G.mul(cur, classes.representatives[j]);
        }
    }

    // Fourier lift: multiplicity of zeta^k among the eigenvalues of X(g_j)
    const u64 lam = fp_pow(fp_primitive_root(p), (p - 1) / e, p);
    const u64 lam_inv = fp_inv(lam, p);
    std::vector<u64> lam_inv_pow(e);
    lam_inv_pow[0] = 1;
    for (long x = 1; x < e; ++x) lam_inv_pow[x] = fp_mul(lam_inv_pow[x - 1], lam_inv, p);
    const u64 inv_e = fp_inv(e % p, p);

    CharacterTable table;
    table.group_name = G.name();
    table.group_order = n;
    table.exponent = e;
    table.classes = classes;
    table.degrees = degrees;
    table.prime = p;
    table.seed = seed;
    table.values.assign(r, std::vector<Cyclotomic>(r));
    table.decomp.assign(r, std::vector<RootDecomp>(r));

    std::vector<mpz_class> raw(e);
    for (int t = 0; t < r; ++t)
        for (int j = 0; j < r; ++j) {
            RootDecomp dec;
            long msum = 0;
            for (long k = 0; k < e; ++k) raw[k] = 0;
            for (long k = 0; k < e; ++k) {
                u64 acc = 0;
                for (long s = 0; s < e; ++s)
                    acc = (acc + chi[t][power_class[j][s]] * lam_inv_pow[(k * s) % e]) % p;
                u64 mk = fp_mul(acc, inv_e, p);
                if (!mk) continue;
                if (mk > static_cast<u64>(degrees[t]))
                    throw LiftInconsistent("eigenvalue multiplicity exceeds the degree");
                dec.emplace_back(k, static_cast<long>(mk));
                raw[k] = static_cast<long>(mk);
                msum += static_cast<long>(mk);
            }
            if (msum != degrees[t])
                throw LiftInconsistent("eigenvalue multiplicities do not sum to the degree");
            table.values[t][j] = Cyclotomic::from_exponent_vector(e, raw);
            table.decomp[t][j] = std::move(dec);
        }

    chartab_detail::sort_rows_canonically(table);

    OrthogonalityReport cert = verify_orthogonality(table);
    if (!cert.ok)
        throw LiftInconsistent("table failed its exact certificate: " + cert.violations[0]);
    return table;
}

/// All linear characters of an abelian group, as exponent vectors over
/// zeta_m with m the exponent: chi(x) = zeta_m^(vec[x]).
inline std::vector<std::vector<int>> linear_characters_abelian(const FiniteGroup& A) {
    if (!is_abelian(A)) throw NotAbelian("linear_characters_abelian: group is not abelian");
    const long m = exponent(A);
    const int n = A.order();
    std::vector<int> gens = A.generator_indices();
    if (gens.empty()) return {std::vector<int>(n, 0)};
    std::vector<long> orders;
    long candidates = 1;
    for (int g : gens) {
        orders.push_back(A.element_order(g));
        candidates *= orders.back();
        if (candidates > 2'000'000)
            throw Error("linear_characters_abelian: generator set too redundant");
    }

    std::vector<std::vector<int>> found;
    std::vector<long> digits(gens.size(), 0);
    for (;;) {
        // candidate: gens[i] -> zeta_m^(digits[i] * m / orders[i])
        std::vector<int> exps(n, -1);
        exps[0] = 0;
        std::vector<int> todo{0};
        bool valid = true;
        while (!todo.empty() && valid) {
            int x = todo.back();
            todo.pop_back();
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                int y = A.mul(x, gens[gi]);
                int val = static_cast<int>((exps[x] + digits[gi] * (m / orders[gi])) % m);
                if (exps[y] < 0) {
                    exps[y] = val;
                    todo.push_back(y);
                } else if (exps[y] != val) {
                    valid = false;
                    break;
                }
            }
        }
        if (valid) found.push_back(std::move(exps));

        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == orders[pos]) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (static_cast<int>(found.size()) != n)
        throw Error("linear_characters_abelian: found " + std::to_string(found.size()) +
                    " characters, expected " + std::to_string(n));
    return found;
}

/// Character table of Dih A for odd abelian A, assembled from the closed
/// form: two linear rows plus one degree-2 row per conjugate pair of
/// non-principal characters of A. Columns follow the canonical conjugacy
/// data of the constructed group, so the result is directly comparable
/// with the general algorithm's output.
inline CharacterTable closed_form_dihedral_table(const FiniteGroup& A,
                                                 int cap = kDefaultOrderCap) {
    if (!is_abelian(A)) throw NotAbelian("closed_form_dihedral_table: A must be abelian");
    if (A.order() % 2 == 0) throw EvenOrder("closed_form_dihedral_table: |A| must be odd");
    if (A.order() == 1)
        throw ElementaryAbelianTwo("closed_form_dihedral_table: A must be non-trivial");

    FiniteGroup G = generalized_dihedral(A, cap);
    const long mA = A.order();
    const long m = exponent(A);
    const long e = 2 * m;  // exponent of G
    ConjugacyData classes = conjugacy_classes(G);
    const int r = classes.num_classes();
    if (r != (mA + 3) / 2)
        throw Error("closed_form_dihedral_table: unexpected class count");

    // theta representatives: non-principal characters of A modulo conjugation
    std::vector<std::vector<int>> lin = linear_characters_abelian(A);
    std::vector<std::vector<int>> theta_reps;
    {
        std::set<std::vector<int>> taken;
        for (const auto& chi : lin) {
            bool principal = true;
            for (int v : chi)
                if (v) {
                    principal = false;
                    break;
                }
            if (principal) continue;
            std::vector<int> bar(chi.size());
            for (std::size_t x = 0; x < chi.size(); ++x) bar[x] = (m - chi[x]) % m;
            std::vector<int> rep = std::min(chi, bar);
            if (taken.insert(rep).second) theta_reps.push_back(rep);
        }
        std::sort(theta_reps.begin(), theta_reps.end());
    }
    if (static_cast<int>(theta_reps.size()) != (mA - 1) / 2)
        throw Error("closed_form_dihedral_table: unexpected theta count");

    CharacterTable table;
    table.group_name = G.name();
    table.group_order = 2 * mA;
    table.exponent = e;
    table.classes = classes;
    table.prime = 0;
    table.seed = 0;

    auto push_row = [&](int degree, auto value_at) {
        std::vector<Cyclotomic> vals(r);
        std::vector<RootDecomp> decs(r);
        for (int j = 0; j < r; ++j) {
            RootDecomp d = value_at(j);
            std::map<long, long> merged;
            for (auto [k, c] : d) merged[k] += c;
            RootDecomp clean;
            std::vector<mpz_class> raw(e, mpz_class(0));
            for (auto [k, c] : merged)
                if (c) {
                    clean.emplace_back(k, c);
                    raw[k] = c;
                }
            vals[j] = Cyclotomic::from_exponent_vector(e, raw);
            decs[j] = std::move(clean);
        }
        table.degrees.push_back(degree);
        table.values.push_back(std::move(vals));
        table.decomp.push_back(std::move(decs));
    };

    // principal character
    push_row(1, [&](int) { return RootDecomp{{0, 1}}; });
    // sign character sigma: 1 on the A block, -1 on the reflection class
    push_row(1, [&](int j) {
        bool reflection = classes.representatives[j] >= mA;
        return reflection ? RootDecomp{{m, 1}} : RootDecomp{{0, 1}};  // zeta_e^m = -1
    });
    // induced rows: theta(a) + theta(a^-1) on a-classes, 0 on reflections
    for (const auto& theta : theta_reps) {
        push_row(2, [&](int j) -> RootDecomp {
            int rep = classes.representatives[j];
            if (rep >= mA) return {};
            long v = theta[rep];
            long w = theta[A.inv(rep)];
            return RootDecomp{{2 * v, 1}, {2 * w, 1}};  // zeta_m^v = zeta_e^(2v)
        });
    }

    chartab_detail::sort_rows_canonically(table);

    OrthogonalityReport cert = verify_orthogonality(table);
    if (!cert.ok)
        throw LiftInconsistent("closed-form table failed its exact certificate: " +
                               cert.violations[0]);
    return table;
}

/// Row and column signature comparison: equal iff the multisets of
/// (degree, sorted value list) rows and (class size, element order, sorted
/// value list) columns coincide.
inline bool tables_equal_up_to_permutation(const CharacterTable& a, const CharacterTable& b) {
    if (a.num_rows() != b.num_rows() || a.num_classes() != b.num_classes()) return false;
    if (a.group_order != b.group_order) return false;
    const int r = a.num_rows();

    auto row_signatures = [r](const CharacterTable& t) {
        std::vector<std::pair<int, std::vector<std::string>>> sigs;
        for (int i = 0; i < r; ++i) {
            std::vector<std::string> vals;
            for (int j = 0; j < r; ++j) vals.push_back(t.values[i][j].to_string());
            std::sort(vals.begin(), vals.end());
            sigs.emplace_back(t.degrees[i], std::move(vals));
        }
        std::sort(sigs.begin(), sigs.end());
        return sigs;
    };
    auto col_signatures = [r](const CharacterTable& t) {
        std::vector<std::tuple<int, int, std::vector<std::string>>> sigs;
        for (int j = 0; j < r; ++j) {
            std::vector<std::string> vals;
            for (int i = 0; i < r; ++i) vals.push_back(t.values[i][j].to_string());
            std::sort(vals.begin(), vals.end());
            sigs.emplace_back(t.classes.class_sizes[j], t.classes.element_orders[j],
                              std::move(vals));
        }
        std::sort(sigs.begin(), sigs.end());
        return sigs;
    };

    return row_signatures(a) == row_signatures(b) && col_signatures(a) == col_signatures(b);
}

}  // namespace charval
