#pragma once

#include <string>
#include <vector>

#include "charval/constructions.hpp"

namespace charval {

namespace families_detail {

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

inline long parse_long(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError("expected an integer, got ''");
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(t, &pos);
    } catch (...) {
        throw ParseError("expected an integer, got '" + t + "'");
    }
    if (pos != t.size()) throw ParseError("trailing characters in integer '" + t + "'");
    return v;
}

/// "n1 x n2 x ..." with items n or p^r (r repeated factors of p).
inline AbelianSpec parse_abelian_spec(const std::string& text) {
    AbelianSpec spec;
    std::string item;
    auto flush = [&]() {
        std::string t = strip(item);
        item.clear();
        if (t.empty()) throw ParseError("empty factor in abelian spec");
        std::size_t caret = t.find('^');
        if (caret == std::string::npos) {
            spec.cyclic_factors.push_back(parse_long(t));
        } else {
            long p = parse_long(t.substr(0, caret));
            long r = parse_long(t.substr(caret + 1));
            if (r < 1 || r > 30) throw ParseError("bad power in abelian spec: " + t);
            for (long i = 0; i < r; ++i) spec.cyclic_factors.push_back(p);
        }
    };
    for (char c : text) {
        if (c == 'x') flush();
        else item += c;
    }
    flush();
    return spec;
}

/// Split "a,b" at the top-level comma (parentheses may nest).
inline std::pair<std::string, std::string> split_top_comma(const std::string& text) {
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        else if (text[i] == ')') --depth;
        else if (text[i] == ',' && depth == 0)
            return {text.substr(0, i), text.substr(i + 1)};
    }
    throw ParseError("product(...) needs two comma-separated specs");
}

}  // namespace families_detail

/// Family mini-grammar: cyclic(n), abelian(n1 x n2 x ...), elem(p^r), sym(n),
/// dihedral(n), quaternion8, gendihedral(<abelian spec>), product(<s>,<s>).
inline FiniteGroup make_family(const std::string& spec, int cap = kDefaultOrderCap) {
    using namespace families_detail;
    std::string s = strip(spec);
    if (s == "quaternion8") return quaternion8(cap);
    std::size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw ParseError("bad family spec '" + spec + "'");
    std::string head = strip(s.substr(0, open));
    std::string args = s.substr(open + 1, s.size() - open - 2);

    if (head == "cyclic") return cyclic(parse_long(args), cap);
    if (head == "abelian") return abelian(parse_abelian_spec(args), cap);
    if (head == "elem") {
        AbelianSpec a = parse_abelian_spec(args);
        return abelian(a, cap);
    }
    if (head == "sym") return symmetric(static_cast<int>(parse_long(args)), cap);
    if (head == "dihedral") return dihedral(parse_long(args), cap);
    if (head == "gendihedral") return generalized_dihedral(abelian(parse_abelian_spec(args), cap), cap);
    if (head == "product") {
        auto [left, right] = split_top_comma(args);
        return direct_product(make_family(left, cap), make_family(right, cap), cap);
    }
    throw ParseError("unknown family '" + head + "'");
}

/// The constructed part of the verification fleet: every family the
/// classification statements name, the four-value witnesses Dih C3^r up to
/// r = 4, and near-miss contrast groups around order 2 * 3^r.
inline std::vector<FiniteGroup> builtin_fleet(int cap = kDefaultOrderCap) {
    const char* specs[] = {
        "cyclic(1)", "cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(5)", "cyclic(6)",
        "cyclic(8)", "cyclic(9)", "cyclic(12)", "cyclic(16)", "cyclic(25)",
        "elem(2^2)", "elem(2^3)", "elem(2^4)",
        "elem(3^2)", "elem(3^3)", "elem(3^4)",
        "elem(5^2)",
        "abelian(2 x 4)", "abelian(4 x 4)", "abelian(2 x 2 x 4)", "abelian(3 x 9)",
        "sym(3)", "sym(4)", "sym(5)", "sym(6)",
        "dihedral(8)", "dihedral(16)", "quaternion8",
        "gendihedral(3)", "gendihedral(3^2)", "gendihedral(3^3)", "gendihedral(3^4)",
        "gendihedral(9)", "gendihedral(27)", "gendihedral(3 x 9)", "gendihedral(81)",
        "gendihedral(9^2)", "gendihedral(3 x 27)", "gendihedral(3^2 x 9)",
        "gendihedral(5)", "gendihedral(7)", "gendihedral(15)", "gendihedral(21)",
        "gendihedral(5^2)",
        "product(cyclic(2), gendihedral(3))",
        "product(cyclic(2), product(cyclic(2), gendihedral(3)))",
        "product(cyclic(2), gendihedral(3^2))",
        "product(cyclic(3), sym(3))",
        "product(cyclic(2), quaternion8)",
    };
    std::vector<FiniteGroup> fleet;
    for (const char* s : specs) fleet.push_back(make_family(s, cap));
    return fleet;
}

}  // namespace charval
