#pragma once

#include <vector>

#include "charval/conjugacy.hpp"
#include "charval/group.hpp"

namespace charval {

/// Class multiplication coefficients a_ijk: the number of pairs (x, y) with
/// x in class i, y in class j and xy equal to the fixed representative of
/// class k.
struct ClassMatrixData {
    int num_classes = 0;
    std::vector<long> a;  // flattened (i * r + j) * r + k

    long at(int i, int j, int k) const {
        return a[(static_cast<std::size_t>(i) * num_classes + j) * num_classes + k];
    }
};

/// One pass per class k: every x factors rep_k as x * (x^-1 rep_k).
inline ClassMatrixData class_matrices(const FiniteGroup& G, const ConjugacyData& classes) {
    const int r = classes.num_classes();
    ClassMatrixData data;
    data.num_classes = r;
    data.a.assign(static_cast<std::size_t>(r) * r * r, 0);
    for (int k = 0; k < r; ++k) {
        int rep = classes.representatives[k];
        for (int x = 0; x < G.order(); ++x) {
            int i = classes.class_of[x];
            int j = classes.class_of[G.mul(G.inv(x), rep)];
            ++data.a[(static_cast<std::size_t>(i) * r + j) * r + k];
        }
    }
    return data;
}

}  // namespace charval
