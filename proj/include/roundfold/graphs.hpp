#pragma once

#include <string>
#include <utility>
#include <vector>

#include "roundfold/foldmap.hpp"

namespace roundfold {

struct DescriptorIncompleteError : std::runtime_error {
    explicit DescriptorIncompleteError(const std::string& what) : std::runtime_error(what) {}
};

/// Directed graph on the closures of the regular-value regions. Vertices are
/// the region indices 0..l; every edge joins adjacent regions. The edge u->v
/// exists iff the inclusion of the fiber on u's side of the separating
/// singular component into its normal fiber is surjective in (degree, ring);
/// reachability then matches the inductive triviality propagation of the
/// applicability theorems.
struct RegionGraph {
    int vertex_count = 0;
    int degree = 0;
    Ring ring = Ring::Integers;
    // "h0-all-rings" for the ring-independent component graph
    std::string kind;
    std::vector<std::pair<int, int>> edges;  // sorted, unique
    std::vector<std::string> vertex_labels;  // fiber expressions, for exports

    bool has_edge(int from, int to) const;
    // reach[v] = directed reachability from `from`
    std::vector<bool> reachable_from(const std::vector<int>& sources) const;

    friend bool operator==(const RegionGraph&, const RegionGraph&) = default;
};

RegionGraph build_graph(const FoldMapDescriptor& d, int degree, Ring ring);

// Edges demand surjectivity of H_0 over every commutative ring at once, which
// is exactly surjectivity of the component map onto the normal fiber.
RegionGraph h0_all_rings_graph(const FoldMapDescriptor& d);

bool is_starting_set(const RegionGraph& g, const std::vector<int>& s);

// All inclusion-minimal starting sets, lexicographically ordered. Exhaustive
// over subsets; refuses more than 21 vertices.
std::vector<std::vector<int>> minimal_starting_sets(const RegionGraph& g);

// Def-4 start-equivalence with the shared-witness reading: one s' in S must
// reach v in both graphs.
bool start_equivalent(const RegionGraph& g1, const RegionGraph& g2, const std::vector<int>& s);

std::string export_dot(const RegionGraph& g);

}  // namespace roundfold
