#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charval/group.hpp"

namespace charval {

/// One catalog entry: a permutation-generator description of a group,
/// optionally with its expected order and free-form tags.
struct GroupRecord {
    std::string name;
    int degree = 0;
    std::vector<Perm> generators;
    std::optional<long> expected_order;
    std::vector<std::string> tags;
};

struct CatalogParseResult {
    std::vector<GroupRecord> records;
    std::vector<std::string> warnings;
};

namespace catalog_detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline long parse_int_field(const std::string& text, int line_no, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trail");
        return v;
    } catch (...) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + text +
                         "'");
    }
}

}  // namespace catalog_detail

/// Grammar: records separated by blank lines; lines are `group <name>`,
/// `degree <n>`, `gen <comma-separated images>`, `order <m>`, `tag <word>`;
/// `#` starts a comment. Unknown keywords are ignored with a warning.
inline CatalogParseResult parse_catalog(std::istream& in) {
    using catalog_detail::parse_int_field;
    using catalog_detail::trim;
    CatalogParseResult result;
    GroupRecord cur;
    bool open = false;
    int line_no = 0;

    auto flush = [&]() {
        if (!open) return;
        if (cur.degree < 1)
            throw ParseError("record '" + cur.name + "': missing or bad degree");
        result.records.push_back(std::move(cur));
        cur = GroupRecord{};
        open = false;
    };

    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            flush();
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));
        if (key == "group") {
            flush();
            if (rest.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty group name");
            cur.name = rest;
            open = true;
        } else if (!open) {
            throw ParseError("line " + std::to_string(line_no) + ": '" + key +
                             "' before any group header");
        } else if (key == "degree") {
            cur.degree = static_cast<int>(parse_int_field(rest, line_no, "degree"));
        } else if (key == "gen") {
            if (cur.degree < 1)
                throw ParseError("line " + std::to_string(line_no) + ": gen before degree");
            Perm p;
            std::string item;
            std::istringstream gs(rest);
            while (std::getline(gs, item, ','))
                p.push_back(static_cast<int>(parse_int_field(trim(item), line_no, "image")));
            if (!is_valid_permutation(p, cur.degree))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": image list is not a bijection on 0.." +
                                 std::to_string(cur.degree - 1));
            cur.generators.push_back(std::move(p));
        } else if (key == "order") {
            cur.expected_order = parse_int_field(rest, line_no, "order");
        } else if (key == "tag") {
            if (rest.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty tag");
            cur.tags.push_back(rest);
        } else {
            result.warnings.push_back("line " + std::to_string(line_no) + ": unknown keyword '" +
                                      key + "' ignored");
        }
    }
    flush();
    return result;
}

inline CatalogParseResult parse_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file " + path);
    return parse_catalog(in);
}

/// Canonical serialization; parse(serialize(x)) round-trips byte-identically.
inline std::string serialize_catalog(const std::vector<GroupRecord>& records) {
    std::ostringstream out;
    bool first = true;
    for (const GroupRecord& r : records) {
        if (!first) out << "\n";
        first = false;
        out << "group " << r.name << "\n";
        out << "degree " << r.degree << "\n";
        for (const Perm& g : r.generators) {
            out << "gen ";
            for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i];
            out << "\n";
        }
        if (r.expected_order) out << "order " << *r.expected_order << "\n";
        for (const auto& t : r.tags) out << "tag " << t << "\n";
    }
    return out.str();
}

/// Closure plus validation of the declared order.
inline FiniteGroup load_group(const GroupRecord& record, int cap = kDefaultOrderCap) {
    FiniteGroup G = close_permutations(record.degree, record.generators, cap, record.name,
                                       Origin::Catalog);
    if (record.expected_order && G.order() != *record.expected_order)
        throw OrderMismatch("group " + record.name + ": closure has order " +
                            std::to_string(G.order()) + ", record declares " +
                            std::to_string(*record.expected_order));
    return G;
}

}  // namespace charval
