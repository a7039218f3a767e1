#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "charval/conjugacy.hpp"
#include "charval/constructions.hpp"
#include "charval/group.hpp"
#include "oracles.hpp"

using namespace charval;

namespace {

FiniteGroup make_s3() {
    return close_permutations(3, {{1, 0, 2}, {1, 2, 0}}, 100, "S3");
}

}  // namespace

TEST_CASE("close_permutations enumerates S3") {
    FiniteGroup G = make_s3();
    REQUIRE(G.order() == 6);
    REQUIRE(G.perm(0) == identity_perm(3));

    auto oracle = oracles::pairwise_closure(3, {{1, 0, 2}, {1, 2, 0}});
    REQUIRE(oracle.size() == 6);
    for (const Perm& p : oracle) REQUIRE(G.index_of(p) >= 0);
}

TEST_CASE("close_permutations trivial and small cases") {
    FiniteGroup T = close_permutations(1, {});
    REQUIRE(T.order() == 1);

    // two double transpositions on four points generate the Klein group
    FiniteGroup V = close_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    REQUIRE(V.order() == 4);
    REQUIRE(exponent(V) == 2);
    auto oracle = oracles::pairwise_closure(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    REQUIRE(oracle.size() == 4);
}

TEST_CASE("close_permutations rejects bad input") {
    REQUIRE_THROWS_AS(close_permutations(3, {{0, 0, 2}}), InvalidPermutation);
    REQUIRE_THROWS_AS(close_permutations(3, {{1, 0}}), InvalidPermutation);
    REQUIRE_THROWS_AS(close_permutations(5, {{1, 2, 3, 4, 0}}, 4), ClosureExceedsCap);
}

TEST_CASE("group axioms hold on the index range") {
    FiniteGroup G = make_s3();
    for (int i = 0; i < G.order(); ++i) {
        REQUIRE(G.mul(0, i) == i);
        REQUIRE(G.mul(i, 0) == i);
        REQUIRE(G.mul(i, G.inv(i)) == 0);
        REQUIRE(G.mul(G.inv(i), i) == 0);
    }
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            for (int c = 0; c < G.order(); ++c)
                REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
}

TEST_CASE("conjugacy classes of S3 are sized 1,3,2 in canonical order") {
    FiniteGroup G = make_s3();
    ConjugacyData cd = conjugacy_classes(G);
    REQUIRE(cd.num_classes() == 3);
    REQUIRE(cd.representatives[0] == 0);
    REQUIRE(cd.class_sizes[0] == 1);
    // canonical order sorts by (element order, size, rep): id, transpositions, 3-cycles
    REQUIRE(cd.element_orders == std::vector<int>{1, 2, 3});
    REQUIRE(cd.class_sizes == std::vector<int>{1, 3, 2});
    int total = std::accumulate(cd.class_sizes.begin(), cd.class_sizes.end(), 0);
    REQUIRE(total == G.order());
}

TEST_CASE("conjugacy classes: trivial group and Dih C9") {
    REQUIRE(conjugacy_classes(cyclic(1)).num_classes() == 1);
    FiniteGroup G = generalized_dihedral(cyclic(9));
    REQUIRE(G.order() == 18);
    REQUIRE(conjugacy_classes(G).num_classes() == 6);  // (9+3)/2
}

TEST_CASE("class equation and orbit-stabilizer across a small fleet") {
    std::vector<FiniteGroup> fleet;
    fleet.push_back(make_s3());
    fleet.push_back(symmetric(4));
    fleet.push_back(symmetric(5));
    fleet.push_back(quaternion8());
    fleet.push_back(dihedral(8));
    fleet.push_back(generalized_dihedral(abelian({{3, 3}})));
    fleet.push_back(generalized_dihedral(abelian({{3, 3, 3}})));
    fleet.push_back(cyclic(12));
    fleet.push_back(dihedral(60));
    for (const FiniteGroup& G : fleet) {
        ConjugacyData cd = conjugacy_classes(G);
        int total = 0;
        for (int c = 0; c < cd.num_classes(); ++c) {
            total += cd.class_sizes[c];
            REQUIRE(G.order() % cd.class_sizes[c] == 0);
        }
        REQUIRE(total == G.order());
        // orbit-stabilizer at every single element (all fleet orders <= 200)
        for (int x = 0; x < G.order(); ++x)
            REQUIRE(centralizer(G, x).order() * cd.class_sizes[cd.class_of[x]] == G.order());
        // inverse_class is an involution
        for (int c = 0; c < cd.num_classes(); ++c)
            REQUIRE(cd.inverse_class[cd.inverse_class[c]] == c);
        // representatives are minimal within their class
        for (int x = 0; x < G.order(); ++x)
            REQUIRE(cd.representatives[cd.class_of[x]] <= x);
    }
}

TEST_CASE("centralizer examples") {
    // Dih C3^2: every involution has centralizer of order 2
    FiniteGroup G = generalized_dihedral(abelian({{3, 3}}));
    for (int x = 1; x < G.order(); ++x)
        if (G.element_order(x) == 2) REQUIRE(centralizer(G, x).order() == 2);

    REQUIRE(centralizer(G, 0).order() == G.order());

    // S4: centralizer of a transposition has order 4
    FiniteGroup S4 = symmetric(4);
    int transposition = -1;
    for (int x = 1; x < S4.order(); ++x) {
        int moved = 0;
        for (int p = 0; p < 4; ++p)
            if (S4.perm(x)[p] != p) ++moved;
        if (moved == 2) {
            transposition = x;
            break;
        }
    }
    REQUIRE(transposition >= 0);
    REQUIRE(centralizer(S4, transposition).order() == 4);
}

TEST_CASE("derived subgroup matches the exhaustive commutator oracle") {
    std::vector<FiniteGroup> fleet;
    fleet.push_back(make_s3());
    fleet.push_back(symmetric(4));
    fleet.push_back(quaternion8());
    fleet.push_back(cyclic(15));
    fleet.push_back(generalized_dihedral(cyclic(9)));
    for (const FiniteGroup& G : fleet) {
        Subgroup D = derived_subgroup(G);
        REQUIRE(D.members == oracles::derived_exhaustive(G));
        REQUIRE(D.is_normal);
        REQUIRE(is_normal_members(G, D.members));
    }

    REQUIRE(derived_subgroup(cyclic(12)).order() == 1);
    REQUIRE(derived_subgroup(symmetric(4)).order() == 12);
    FiniteGroup D27 = generalized_dihedral(abelian({{3, 3, 3}}));
    REQUIRE(derived_subgroup(D27).order() == 27);
}

TEST_CASE("derived subgroup trivial iff abelian") {
    std::vector<FiniteGroup> fleet;
    fleet.push_back(cyclic(8));
    fleet.push_back(abelian({{2, 4}}));
    fleet.push_back(make_s3());
    fleet.push_back(quaternion8());
    for (const FiniteGroup& G : fleet)
        REQUIRE((derived_subgroup(G).order() == 1) == is_abelian(G));
}

TEST_CASE("odd core examples and oracle agreement") {
    REQUIRE(odd_core(make_s3()).order() == 3);
    REQUIRE(odd_core(abelian({{2, 2, 2}})).order() == 1);
    REQUIRE(odd_core(symmetric(4)).order() == 1);

    std::vector<FiniteGroup> fleet;
    fleet.push_back(make_s3());
    fleet.push_back(symmetric(4));
    fleet.push_back(dihedral(12));
    fleet.push_back(generalized_dihedral(cyclic(15)));
    fleet.push_back(cyclic(30));
    fleet.push_back(quaternion8());
    fleet.push_back(direct_product(cyclic(3), symmetric(3)));
    for (const FiniteGroup& G : fleet) {
        Subgroup O = odd_core(G);
        REQUIRE(O.order() % 2 == 1);
        REQUIRE(O.is_normal);
        REQUIRE(O.members == oracles::odd_core_exhaustive(G));
    }
}

TEST_CASE("normal subgroup join method agrees with subset brute force") {
    std::vector<FiniteGroup> fleet;
    fleet.push_back(make_s3());
    fleet.push_back(quaternion8());
    fleet.push_back(dihedral(8));
    fleet.push_back(symmetric(4));
    fleet.push_back(cyclic(12));
    for (const FiniteGroup& G : fleet) {
        auto joins = oracles::all_normal_subgroups(G);
        std::sort(joins.begin(), joins.end());
        REQUIRE(joins == oracles::all_normal_subgroups_subsets(G));
    }
}

TEST_CASE("sylow, center, exponent, solvability") {
    REQUIRE(exponent(cyclic(4)) == 4);
    REQUIRE(exponent(abelian({{2, 4}})) == 4);

    FiniteGroup A = abelian({{3, 9}});
    REQUIRE(center(A).order() == A.order());

    for (int r = 1; r <= 3; ++r) {
        std::vector<long> factors(r, 3);
        FiniteGroup G = generalized_dihedral(abelian({factors}));
        REQUIRE(sylow_two(G).order() == 2);
    }
    REQUIRE(sylow_two(symmetric(4)).order() == 8);
    REQUIRE(sylow_two(cyclic(15)).order() == 1);
    FiniteGroup s4_syl = symmetric(4);
    Subgroup P = sylow_two(s4_syl);
    for (int m : P.members) {
        int ord = s4_syl.element_order(m);
        REQUIRE((ord & (ord - 1)) == 0);
    }

    REQUIRE(is_solvable(symmetric(4)));
    REQUIRE(is_solvable(quaternion8()));
    REQUIRE_FALSE(is_solvable(close_permutations(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}, 100, "A5")));

    REQUIRE(is_elementary_abelian(abelian({{3, 3}}), 3));
    REQUIRE_FALSE(is_elementary_abelian(abelian({{3, 9}}), 3));
    REQUIRE(is_elementary_abelian(cyclic(1), 2));

    auto orders = element_orders(make_s3());
    REQUIRE(orders == std::vector<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("inverts_subgroup") {
    FiniteGroup G = generalized_dihedral(abelian({{3, 3}}));
    Subgroup O = odd_core(G);
    REQUIRE(O.order() == 9);
    for (int t = 1; t < G.order(); ++t)
        if (G.element_order(t) == 2) REQUIRE(inverts_subgroup(G, t, O));

    Subgroup trivialN = generated_subgroup(G, {});
    REQUIRE(inverts_subgroup(G, 9, trivialN));  // index 9 is t = (1,1)

    FiniteGroup S4 = symmetric(4);
    Subgroup A4 = derived_subgroup(S4);
    int transposition = -1;
    for (int x = 1; x < S4.order(); ++x) {
        int moved = 0;
        for (int p = 0; p < 4; ++p)
            if (S4.perm(x)[p] != p) ++moved;
        if (moved == 2) {
            transposition = x;
            break;
        }
    }
    REQUIRE_FALSE(inverts_subgroup(S4, transposition, A4));

    int threecycle = -1;
    for (int x = 1; x < S4.order(); ++x)
        if (S4.element_order(x) == 3) {
            threecycle = x;
            break;
        }
    REQUIRE_THROWS_AS(inverts_subgroup(S4, threecycle, A4), NotAnInvolution);
}

TEST_CASE("quotient groups") {
    FiniteGroup S3 = make_s3();
    Subgroup A3 = derived_subgroup(S3);
    FiniteGroup Q = quotient(S3, A3);
    REQUIRE(Q.order() == 2);

    Subgroup trivialN = generated_subgroup(S3, {});
    trivialN.is_normal = true;
    FiniteGroup copy = quotient(S3, trivialN);
    REQUIRE(copy.order() == S3.order());
    REQUIRE(conjugacy_classes(copy).num_classes() == conjugacy_classes(S3).num_classes());

    FiniteGroup G = generalized_dihedral(abelian({{3, 3}}));
    REQUIRE(quotient(G, odd_core(G)).order() == 2);

    FiniteGroup S4 = symmetric(4);
    Subgroup H = generated_subgroup(S4, {S4.generator_indices()[0]});  // <(0 1)>, not normal
    REQUIRE_THROWS_AS(quotient(S4, H), NotNormal);
}

TEST_CASE("random spot checks: conj and pow behave") {
    FiniteGroup G = symmetric(5);
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> pick(0, G.order() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        int x = pick(rng), g = pick(rng);
        REQUIRE(G.conj(x, g) == G.mul(G.mul(G.inv(g), x), g));
        int ord = G.element_order(x);
        REQUIRE(G.pow(x, ord) == 0);
        REQUIRE(G.pow(x, -1) == G.inv(x));
        REQUIRE(G.element_order(G.conj(x, g)) == ord);
    }
}
