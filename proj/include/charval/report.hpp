#pragma once

#include <json.hpp>

#include <string>

#include "charval/analysis.hpp"
#include "charval/chartab.hpp"

namespace charval {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Machine form of a value: the integer shortcut when the conductor reduces
/// to 1, otherwise {"conductor": e, "coeffs": [[k, c], ...]}.
inline Json value_to_json(const Cyclotomic& v) {
    if (auto n = v.as_rational_integer()) {
        if (n->fits_slong_p()) return Json(n->get_si());
        return Json(n->get_str());
    }
    Json coeffs = Json::array();
    const auto& c = v.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Json pair = Json::array();
        pair.push_back(static_cast<long>(k));
        if (c[k].fits_slong_p()) pair.push_back(c[k].get_si());
        else pair.push_back(c[k].get_str());
        coeffs.push_back(std::move(pair));
    }
    return Json{{"conductor", v.conductor()}, {"coeffs", std::move(coeffs)}};
}

inline Json table_to_json(const CharacterTable& T) {
    Json classes = Json::array();
    for (int j = 0; j < T.num_classes(); ++j)
        classes.push_back(Json{{"rep_order", T.classes.element_orders[j]},
                               {"size", T.classes.class_sizes[j]}});
    Json rows = Json::array();
    for (const auto& row : T.values) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(value_to_json(v));
        rows.push_back(std::move(r));
    }
    return Json{{"group", Json{{"name", T.group_name}, {"order", T.group_order}}},
                {"exponent", T.exponent},
                {"prime", T.prime},
                {"seed", T.seed},
                {"num_classes", T.num_classes()},
                {"classes", std::move(classes)},
                {"degrees", T.degrees},
                {"rows", std::move(rows)}};
}

inline Json profile_to_json(const ValueProfile& p) {
    Json cv = Json::array();
    for (const auto& v : p.cv) cv.push_back(value_to_json(v));
    return Json{{"cv", std::move(cv)},
                {"cv_size", p.cv_size},
                {"cd", p.cd},
                {"b", p.b},
                {"has_zero", p.has_zero}};
}

inline Json verdict_to_json(const Verdict& v) {
    Json j{{"status", status_name(v.status)}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

inline Json report_to_json(const ClassificationReport& r) {
    Json verdicts = Json::object();
    for (const auto& [name, v] : r.verdicts) verdicts[name] = verdict_to_json(v);
    return Json{{"name", r.name},
                {"order", r.order},
                {"origin", r.origin},
                {"profile", profile_to_json(r.profile)},
                {"num_classes", r.num_classes},
                {"exponent", r.exponent_value},
                {"abelian", r.abelian},
                {"solvable", r.solvable},
                {"elem_abelian_2", r.elem_abelian_2},
                {"elem_abelian_3", r.elem_abelian_3},
                {"derived_order", r.derived_order},
                {"odd_core_order", r.odd_core_order},
                {"derived_equals_odd_core", r.derived_equals_odd_core},
                {"sylow2_order", r.sylow2_order},
                {"involution_centralizer_orders", r.involution_centralizer_orders},
                {"involutions_invert_odd_core", r.involutions_invert_odd_core},
                {"quotient_by_odd_core_is_2group", r.quotient_by_odd_core_is_2group},
                {"quotient_by_derived_elem_ab_2", r.quotient_by_derived_elem_ab_2},
                {"gendihedral_elem_ab_3", r.gendihedral_elem_ab_3},
                {"zero_at_involutions_nonlinear", r.zero_at_involutions_nonlinear},
                {"prime", r.prime},
                {"seed", r.seed},
                {"verdicts", std::move(verdicts)}};
}

}  // namespace charval
