#pragma once

#include <atomic>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "charval/chartab.hpp"
#include "charval/group.hpp"

namespace charval {

enum class Status { Pass, Fail, Warn, Skip };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Warn: return "WARN";
        default: return "SKIP";
    }
}

struct Verdict {
    Status status = Status::Pass;
    std::string detail;
};

/// The set of character values cv(G), the degree set cd(G), and the largest
/// degree b(G), all computed from an exact table.
struct ValueProfile {
    std::vector<Cyclotomic> cv;  // deduplicated, at conductor exponent(G), lex order
    int cv_size = 0;
    std::vector<int> cd;         // ascending
    int b = 1;
    bool has_zero = false;

    bool contains(const Cyclotomic& x) const {
        for (const auto& v : cv)
            if (v == x) return true;
        return false;
    }
};

inline ValueProfile value_profile(const CharacterTable& T) {
    ValueProfile profile;
    std::vector<Cyclotomic> all;
    for (const auto& row : T.values)
        for (const auto& v : row) all.push_back(v.to_conductor(T.exponent));
    std::sort(all.begin(), all.end(), [](const Cyclotomic& a, const Cyclotomic& b) {
        return lex_less(a, b);
    });
    for (const auto& v : all)
        if (profile.cv.empty() || !(profile.cv.back() == v)) profile.cv.push_back(v);
    profile.cv_size = static_cast<int>(profile.cv.size());

    std::set<int> degrees(T.degrees.begin(), T.degrees.end());
    profile.cd.assign(degrees.begin(), degrees.end());
    profile.b = profile.cd.empty() ? 1 : profile.cd.back();
    profile.has_zero = profile.contains(Cyclotomic(0));
    if (!profile.contains(Cyclotomic(1)))
        throw Error("value_profile: principal character value missing");
    return profile;
}

/// Per-group record: the value profile plus every structural flag the
/// classification statements consume, and named verdicts.
struct ClassificationReport {
    std::string name;
    long order = 1;
    std::string origin;

    ValueProfile profile;
    int num_classes = 0;
    long exponent_value = 1;
    bool abelian = false;
    bool solvable = true;
    bool elem_abelian_2 = false;
    bool elem_abelian_3 = false;
    long derived_order = 1;
    long odd_core_order = 1;
    bool derived_equals_odd_core = true;
    long sylow2_order = 1;
    std::vector<long> involution_centralizer_orders;  // distinct, ascending
    bool involutions_invert_odd_core = true;          // vacuous when no involutions
    bool quotient_by_odd_core_is_2group = true;
    bool quotient_by_derived_elem_ab_2 = false;
    bool gendihedral_elem_ab_3 = false;               // structural identification
    bool zero_at_involutions_nonlinear = true;        // claim (dagger)

    u64 prime = 0;
    u64 seed = 0;

    std::map<std::string, Verdict> verdicts;
};

namespace analysis_detail {

inline bool is_power_of(long n, long p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

inline bool subgroup_elem_abelian(const FiniteGroup& G, const std::vector<int>& members, int p) {
    for (int x : members)
        if (x != 0 && G.element_order(x) != p) return false;
    for (int x : members)
        for (int y : members)
            if (G.mul(x, y) != G.mul(y, x)) return false;
    return true;
}

}  // namespace analysis_detail

/// A finite group is non-abelian iff zero is a character value.
inline Verdict check_lemma_zero(const ClassificationReport& r) {
    if (r.profile.has_zero == !r.abelian) return {Status::Pass, ""};
    return {Status::Fail, r.name + ": has_zero=" + (r.profile.has_zero ? "true" : "false") +
                              " but abelian=" + (r.abelian ? "true" : "false")};
}

/// For abelian groups, |cv(G)| equals the maximum element order.
inline Verdict check_lemma_cv_count_abelian(const ClassificationReport& r) {
    if (!r.abelian) throw NotAbelian("check_lemma_cv_count_abelian: group is not abelian");
    if (r.profile.cv_size == r.exponent_value) return {Status::Pass, ""};
    return {Status::Fail, r.name + ": |cv|=" + std::to_string(r.profile.cv_size) +
                              " != exponent " + std::to_string(r.exponent_value)};
}

/// The four small-count characterizations: |cv| = 1, 2, 3 and (for abelian
/// groups) |cv| = 4.
inline Verdict check_prop_very_few(const ClassificationReport& r) {
    const int c = r.profile.cv_size;
    auto fail = [&](const std::string& item) -> Verdict {
        return {Status::Fail, r.name + ": " + item};
    };
    if ((c == 1) != (r.order == 1)) return fail("|cv|=1 <=> trivial violated");
    if ((c == 2) != (r.order > 1 && r.elem_abelian_2))
        return fail("|cv|=2 <=> non-trivial elementary abelian 2-group violated");
    if ((c == 3) != (r.order > 1 && r.elem_abelian_3))
        return fail("|cv|=3 <=> non-trivial elementary abelian 3-group violated");
    if (r.abelian && ((c == 4) != (r.exponent_value == 4)))
        return fail("abelian: |cv|=4 <=> exponent 4 violated");
    return {Status::Pass, ""};
}

/// Consequences for a non-abelian group with exactly four character values:
/// degree set {1, b}, b | |G:G'|, cv = {-1,0,1,b}, elementary abelian 2
/// abelianization, involution centralizers of order |G:G'| (2-groups),
/// vanishing at involutions for non-linear rows, odd-core facts.
inline Verdict check_four_value_lemmas(const ClassificationReport& r) {
    if (r.abelian || r.profile.cv_size != 4)
        throw Error("check_four_value_lemmas: requires a non-abelian group with |cv| = 4");
    auto fail = [&](const std::string& item) -> Verdict {
        return {Status::Fail, r.name + ": " + item};
    };

    if (r.profile.cd != std::vector<int>{1, r.profile.b}) return fail("cd(G) != {1, b}");
    const long index = r.order / r.derived_order;
    if (index % r.profile.b != 0) return fail("b does not divide |G:G'|");

    if (!(r.profile.contains(Cyclotomic(-1)) && r.profile.contains(Cyclotomic(0)) &&
          r.profile.contains(Cyclotomic(1)) && r.profile.contains(Cyclotomic(r.profile.b))))
        return fail("cv(G) != {-1, 0, 1, b}");

    if (!r.quotient_by_derived_elem_ab_2 || index < 2)
        return fail("G/G' is not a non-trivial elementary abelian 2-group");

    if (r.involution_centralizer_orders.size() != 1 ||
        r.involution_centralizer_orders[0] != index ||
        !analysis_detail::is_power_of(index, 2))
        return fail("involution centralizers are not 2-groups of order |G:G'|");

    if (!r.zero_at_involutions_nonlinear)
        return fail("some non-linear character is non-zero at an involution");

    if (!r.quotient_by_odd_core_is_2group) return fail("G/O(G) is not a 2-group");
    if (!r.derived_equals_odd_core) return fail("G' != O(G)");
    if (!r.involutions_invert_odd_core) return fail("an involution does not invert O(G)");
    return {Status::Pass, ""};
}

/// The main characterization: non-abelian with |cv| = 4 iff the group passes
/// the generalized-dihedral-of-C3^r structural test.
inline Verdict check_theorem(const ClassificationReport& r) {
    bool four_values = !r.abelian && r.profile.cv_size == 4;
    if (four_values == r.gendihedral_elem_ab_3) return {Status::Pass, ""};
    return {Status::Fail,
            r.name + ": four-value side " + (four_values ? "true" : "false") +
                ", structural side " + (r.gendihedral_elem_ab_3 ? "true" : "false")};
}

/// Spot check: the five named groups have exactly five character values.
inline Verdict check_remark_five(const std::vector<ClassificationReport>& fleet) {
    const std::vector<std::string> names{"C5", "C2 x Dih(C3)", "S4", "D8", "Q8"};
    for (const auto& name : names) {
        const ClassificationReport* found = nullptr;
        for (const auto& r : fleet)
            if (r.name == name) found = &r;
        if (!found) return {Status::Fail, "missing fleet group " + name};
        if (found->profile.cv_size != 5)
            return {Status::Fail,
                    name + ": |cv|=" + std::to_string(found->profile.cv_size) + " != 5"};
    }
    return {Status::Pass, ""};
}

/// Fleet-scale probe of the solvability impression: fewer than eight
/// character values should imply solvable. A violation is WARN, not FAIL.
inline Verdict check_remark_solvable(const std::vector<ClassificationReport>& fleet) {
    std::string offenders;
    for (const auto& r : fleet)
        if (r.profile.cv_size < 8 && !r.solvable)
            offenders += (offenders.empty() ? "" : ", ") + r.name;
    if (offenders.empty()) return {Status::Pass, ""};
    return {Status::Warn, "non-solvable with |cv| < 8: " + offenders};
}

/// Full per-group analysis: exact table, value profile, structural flags,
/// and every applicable per-group verdict.
inline ClassificationReport analyze_group(const FiniteGroup& G, u64 seed = 0) {
    CharacterTable T = dixon_schneider(G, seed);
    ClassificationReport r;
    r.name = G.name();
    r.order = G.order();
    r.origin = origin_name(G.origin());
    r.profile = value_profile(T);
    r.num_classes = T.num_classes();
    r.exponent_value = T.exponent;
    r.prime = T.prime;
    r.seed = T.seed;

    r.abelian = is_abelian(G);
    r.solvable = is_solvable(G);
    r.elem_abelian_2 = is_elementary_abelian(G, 2);
    r.elem_abelian_3 = is_elementary_abelian(G, 3);

    Subgroup derived = derived_subgroup(G);
    Subgroup core = odd_core(G);
    r.derived_order = derived.order();
    r.odd_core_order = core.order();
    r.derived_equals_odd_core = derived.members == core.members;
    r.sylow2_order = sylow_two(G).order();

    FiniteGroup by_derived = quotient(G, derived);
    r.quotient_by_derived_elem_ab_2 = is_elementary_abelian(by_derived, 2);
    FiniteGroup by_core = quotient(G, core);
    r.quotient_by_odd_core_is_2group = analysis_detail::is_power_of(by_core.order(), 2) &&
                                       [&] {
                                           for (int x = 1; x < by_core.order(); ++x)
                                               if (!analysis_detail::is_power_of(
                                                       by_core.element_order(x), 2))
                                                   return false;
                                           return true;
                                       }();

    std::vector<int> involutions;
    for (int x = 1; x < G.order(); ++x)
        if (G.element_order(x) == 2) involutions.push_back(x);
    std::set<long> cent_orders;
    for (int t : involutions) {
        cent_orders.insert(centralizer(G, t).order());
        if (!inverts_subgroup(G, t, core)) r.involutions_invert_odd_core = false;
    }
    r.involution_centralizer_orders.assign(cent_orders.begin(), cent_orders.end());

    // claim (dagger): chi(t) = 0 for every non-linear chi and involution t
    for (int j = 0; j < T.num_classes() && r.zero_at_involutions_nonlinear; ++j) {
        if (T.classes.element_orders[j] != 2) continue;
        for (int i = 0; i < T.num_rows(); ++i)
            if (T.degrees[i] > 1 && !T.values[i][j].is_zero()) {
                r.zero_at_involutions_nonlinear = false;
                break;
            }
    }

    // structural identification of Dih C3^r
    r.gendihedral_elem_ab_3 =
        r.order >= 6 && r.order % 2 == 0 && analysis_detail::is_power_of(r.order / 2, 3) &&
        r.sylow2_order == 2 && r.derived_equals_odd_core &&
        r.odd_core_order == r.order / 2 &&
        analysis_detail::subgroup_elem_abelian(G, core.members, 3) &&
        !involutions.empty() && r.involutions_invert_odd_core;

    r.verdicts["lemma-zero"] = check_lemma_zero(r);
    r.verdicts["lemma-cv-abelian"] =
        r.abelian ? check_lemma_cv_count_abelian(r) : Verdict{Status::Skip, "non-abelian"};
    r.verdicts["prop-very-few"] = check_prop_very_few(r);
    r.verdicts["four-value-lemmas"] = (!r.abelian && r.profile.cv_size == 4)
                                          ? check_four_value_lemmas(r)
                                          : Verdict{Status::Skip, "not a four-value case"};
    r.verdicts["theorem"] = check_theorem(r);
    {
        OrthogonalityReport cert = verify_orthogonality(T);
        r.verdicts["orthogonality"] =
            cert.ok ? Verdict{Status::Pass, ""}
                    : Verdict{Status::Fail, cert.violations.empty() ? "" : cert.violations[0]};
    }
    return r;
}

/// Analyze a fleet, optionally in parallel; the result order is always
/// (order, name) regardless of scheduling.
inline std::vector<ClassificationReport> analyze_fleet(const std::vector<FiniteGroup>& fleet,
                                                       u64 seed = 0, int jobs = 1) {
    std::vector<ClassificationReport> reports(fleet.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < fleet.size(); ++i) reports[i] = analyze_group(fleet[i], seed);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        std::vector<std::string> errors(fleet.size());
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= fleet.size()) return;
                    try {
                        reports[i] = analyze_group(fleet[i], seed);
                    } catch (const std::exception& ex) {
                        errors[i] = ex.what();
                    }
                }
            });
        for (auto& w : workers) w.join();
        for (std::size_t i = 0; i < fleet.size(); ++i)
            if (!errors[i].empty())
                throw Error("fleet analysis failed for " + fleet[i].name() + ": " + errors[i]);
    }
    std::sort(reports.begin(), reports.end(),
              [](const ClassificationReport& a, const ClassificationReport& b) {
                  return std::tie(a.order, a.name) < std::tie(b.order, b.name);
              });
    return reports;
}

}  // namespace charval
