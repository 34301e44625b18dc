// Internal generator bookkeeping for direct sums and tensor assemblies: free
// generators first in natural order, torsion generators stably sorted by
// order. Shared by the catalog builders and the P-operation rewriter so that
// their matrices agree generator-for-generator.
#pragma once

#include <algorithm>
#include <vector>

#include "roundfold/abelian.hpp"

namespace roundfold::detail {

inline int64_t generator_order(const AbGroup& g, int index) {
    if (index < g.rank) return 0;
    return g.torsion[static_cast<size_t>(index - g.rank)];
}

struct GenLayout {
    AbGroup group;
    std::vector<int> position;  // natural index -> canonical slot, -1 = trivial generator
};

inline GenLayout layout_from_orders(const std::vector<int64_t>& orders) {
    GenLayout out;
    out.position.assign(orders.size(), -1);
    int slot = 0;
    for (size_t i = 0; i < orders.size(); ++i)
        if (orders[i] == 0) out.position[i] = slot++;
    out.group.rank = slot;
    std::vector<std::pair<int64_t, size_t>> torsion;
    for (size_t i = 0; i < orders.size(); ++i)
        if (orders[i] > 1) torsion.push_back({orders[i], i});
    std::stable_sort(torsion.begin(), torsion.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [order, index] : torsion) {
        if (!out.group.torsion.empty() && order % out.group.torsion.back() != 0)
            throw DomainError("generator layout: torsion orders " +
                              std::to_string(out.group.torsion.back()) + " and " +
                              std::to_string(order) + " would need CRT re-basing");
        out.group.torsion.push_back(order);
        out.position[index] = slot++;
    }
    return out;
}

}  // namespace roundfold::detail
