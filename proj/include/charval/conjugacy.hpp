#pragma once

#include <algorithm>
#include <queue>
#include <tuple>
#include <vector>

#include "charval/group.hpp"

namespace charval {

/// Conjugacy classes in canonical order: sorted by (representative element
/// order, class size, representative index). The identity class is first.
struct ConjugacyData {
    std::vector<int> class_of;        // element index -> class index
    std::vector<int> representatives; // minimal element index per class
    std::vector<int> class_sizes;
    std::vector<int> inverse_class;
    std::vector<int> element_orders;  // per representative

    int num_classes() const { return static_cast<int>(representatives.size()); }
};

inline ConjugacyData conjugacy_classes(const FiniteGroup& G) {
    const int n = G.order();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        int c = static_cast<int>(orbits.size());
        std::vector<int> orbit{x};
        cls[x] = c;
        std::queue<int> todo;
        todo.push(x);
        while (!todo.empty()) {
            int a = todo.front();
            todo.pop();
            for (int g : G.generator_indices()) {
                int b = G.conj(a, g);
                if (cls[b] < 0) {
                    cls[b] = c;
                    orbit.push_back(b);
                    todo.push(b);
                }
            }
        }
        orbits.push_back(std::move(orbit));
    }

    // Ascending scan makes each orbit's first element its minimal index.
    const int r = static_cast<int>(orbits.size());
    std::vector<int> perm(r);
    for (int c = 0; c < r; ++c) perm[c] = c;
    auto key = [&](int c) {
        return std::make_tuple(G.element_order(orbits[c][0]),
                               static_cast<int>(orbits[c].size()), orbits[c][0]);
    };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return key(a) < key(b); });

    ConjugacyData data;
    data.class_of.assign(n, -1);
    data.representatives.resize(r);
    data.class_sizes.resize(r);
    data.element_orders.resize(r);
    for (int newc = 0; newc < r; ++newc) {
        const auto& orbit = orbits[perm[newc]];
        data.representatives[newc] = orbit[0];
        data.class_sizes[newc] = static_cast<int>(orbit.size());
        data.element_orders[newc] = G.element_order(orbit[0]);
        for (int m : orbit) data.class_of[m] = newc;
    }
    data.inverse_class.resize(r);
    for (int c = 0; c < r; ++c)
        data.inverse_class[c] = data.class_of[G.inv(data.representatives[c])];
    return data;
}

}  // namespace charval
