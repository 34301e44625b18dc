#include <tuple>

#include "doctest.h"
#include "oracles.hpp"
#include "roundfold/graphs.hpp"
#include "roundfold/textio.hpp"

using namespace roundfold;

namespace {

std::vector<std::pair<int, int>> all_adjacent_pairs(int l) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < l; ++k) {
        edges.emplace_back(k, k + 1);
        edges.emplace_back(k + 1, k);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::pair<int, int>> inward_plus_unbounded(int l) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < l; ++k) edges.emplace_back(k, k + 1);
    edges.emplace_back(l, l - 1);
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

TEST_CASE("example-2 fixture, m-n > 2: every adjacent pair in both directions") {
    for (auto [m, n, l] : {std::tuple{9, 4, 2}, std::tuple{9, 4, 3}, std::tuple{8, 2, 4}}) {
        FoldMapDescriptor d = connected_sum_sphere_bundles(m, n, l);
        for (int degree : {1, 2})
            for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
                RegionGraph g = build_graph(d, degree, ring);
                CAPTURE(m);
                CAPTURE(degree);
                CHECK(g.edges == all_adjacent_pairs(l));
                CHECK(is_starting_set(g, {0}));
            }
    }
}

TEST_CASE("example-2 fixture, m-n = 1: inward edges plus the unbounded edge") {
    for (int l : {1, 2, 3, 4}) {
        FoldMapDescriptor d = connected_sum_sphere_bundles(5, 4, l);
        for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
            RegionGraph g = build_graph(d, 1, ring);
            CAPTURE(l);
            CHECK(g.edges == inward_plus_unbounded(l));
            CHECK(is_starting_set(g, {0}));
        }
        // Every other stored degree behaves like the m-n > 2 case.
        for (Ring ring : {Ring::Integers, Ring::ModTwo})
            CHECK(build_graph(d, 2, ring).edges == all_adjacent_pairs(l));
    }
}

TEST_CASE("example-3 fixture, m-n = 2: the H_2 graph is the inward one") {
    FoldMapDescriptor d = connected_sum_sphere_bundles(4, 2, 2);
    CHECK(build_graph(d, 2, Ring::Integers).edges == inward_plus_unbounded(2));
    CHECK(build_graph(d, 1, Ring::Integers).edges == all_adjacent_pairs(2));
    CHECK(build_graph(d, 1, Ring::ModTwo).edges == all_adjacent_pairs(2));
}

TEST_CASE("special generic sphere graph") {
    FoldMapDescriptor d = special_generic_sphere(5, 3);
    // The single normal fiber is a disc; every H_1/H_2 map is onto a zero
    // group, so both directions appear.
    for (int degree : {1, 2})
        for (Ring ring : {Ring::Integers, Ring::ModTwo})
            CHECK(build_graph(d, degree, ring).edges == all_adjacent_pairs(1));
    // Degree 0: the empty outer fiber cannot surject onto the disc.
    RegionGraph h0 = build_graph(d, 0, Ring::Integers);
    CHECK(h0.has_edge(0, 1));
    CHECK_FALSE(h0.has_edge(1, 0));
}

TEST_CASE("is_starting_set agrees with brute-force path enumeration") {
    std::vector<FoldMapDescriptor> fixtures = {
        connected_sum_sphere_bundles(5, 4, 3), connected_sum_sphere_bundles(9, 4, 2),
        spun_torus_family(5, 2), spun_disc_family(5, 2), two_component_special_generic(5, 2)};
    for (const auto& d : fixtures)
        for (int degree : {0, 1, 2}) {
            RegionGraph g = build_graph(d, degree, Ring::Integers);
            const uint32_t limit = 1u << g.vertex_count;
            for (uint32_t mask = 1; mask < limit; ++mask) {
                std::vector<int> s;
                for (int v = 0; v < g.vertex_count; ++v)
                    if (mask & (1u << v)) s.push_back(v);
                bool expected = true;
                for (int v = 0; v < g.vertex_count && expected; ++v) {
                    bool reachable = false;
                    for (int from : s)
                        reachable = reachable ||
                                    oracles::path_exists_brute_force(g.vertex_count, g.edges, from, v);
                    expected = reachable;
                }
                CHECK(is_starting_set(g, s) == expected);
            }
        }
}

TEST_CASE("starting sets: intermediate annulus fails on the inward-only graph") {
    FoldMapDescriptor d = connected_sum_sphere_bundles(7, 6, 3);  // m-n = 1
    RegionGraph g = build_graph(d, 1, Ring::Integers);
    CHECK(g.edges == inward_plus_unbounded(3));
    CHECK_FALSE(is_starting_set(g, {1}));
    CHECK_FALSE(is_starting_set(g, {3}));
    CHECK(is_starting_set(g, {0}));
    CHECK(is_starting_set(g, {0, 1, 2, 3}));
    CHECK_THROWS_AS(is_starting_set(g, {}), DomainError);
}

TEST_CASE("supersets of starting sets stay starting sets") {
    FoldMapDescriptor d = spun_disc_family(5, 2);
    for (int degree : {0, 1, 2}) {
        RegionGraph g = build_graph(d, degree, Ring::ModTwo);
        const uint32_t limit = 1u << g.vertex_count;
        for (uint32_t mask = 1; mask < limit; ++mask) {
            std::vector<int> s;
            for (int v = 0; v < g.vertex_count; ++v)
                if (mask & (1u << v)) s.push_back(v);
            if (!is_starting_set(g, s)) continue;
            for (int extra = 0; extra < g.vertex_count; ++extra) {
                std::vector<int> bigger = s;
                if (std::find(bigger.begin(), bigger.end(), extra) == bigger.end())
                    bigger.push_back(extra);
                std::sort(bigger.begin(), bigger.end());
                CHECK(is_starting_set(g, bigger));
            }
        }
    }
}

TEST_CASE("minimal starting sets") {
    // Strongly connected graph: all singletons.
    FoldMapDescriptor d = connected_sum_sphere_bundles(9, 4, 2);
    RegionGraph g = build_graph(d, 1, Ring::ModTwo);
    auto minimal = minimal_starting_sets(g);
    CHECK(minimal == std::vector<std::vector<int>>{{0}, {1}, {2}});

    // Inward-only graph: only the proper-core region seeds everything.
    FoldMapDescriptor inward = connected_sum_sphere_bundles(5, 4, 2);
    RegionGraph gi = build_graph(inward, 1, Ring::Integers);
    auto minimal_inward = minimal_starting_sets(gi);
    REQUIRE(!minimal_inward.empty());
    CHECK(minimal_inward[0] == std::vector<int>{0});

    // Edgeless graph: only the full vertex set.
    RegionGraph edgeless;
    edgeless.vertex_count = 3;
    edgeless.kind = "(edgeless)";
    edgeless.vertex_labels = {"a", "b", "c"};
    CHECK(minimal_starting_sets(edgeless) == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("start equivalence") {
    FoldMapDescriptor d = connected_sum_sphere_bundles(9, 4, 2);
    RegionGraph g = build_graph(d, 1, Ring::ModTwo);
    CHECK(start_equivalent(g, g, {0}));
    // start_equivalent(g, g, s) == is_starting_set(g, s) for every s.
    const uint32_t limit = 1u << g.vertex_count;
    for (uint32_t mask = 1; mask < limit; ++mask) {
        std::vector<int> s;
        for (int v = 0; v < g.vertex_count; ++v)
            if (mask & (1u << v)) s.push_back(v);
        CHECK(start_equivalent(g, g, s) == is_starting_set(g, s));
    }

    // Disc-image family: the H_1 mod-2 graph and the all-rings H_0 graph are
    // start-equivalent on the proper-core region.
    RegionGraph h0 = h0_all_rings_graph(d);
    CHECK(start_equivalent(g, h0, {0}));

    RegionGraph edgeless;
    edgeless.vertex_count = g.vertex_count;
    CHECK_FALSE(start_equivalent(g, edgeless, {0}));

    RegionGraph mismatched;
    mismatched.vertex_count = 2;
    CHECK_THROWS_AS(start_equivalent(g, mismatched, {0}), DomainError);
    CHECK_THROWS_AS(start_equivalent(g, h0, {}), DomainError);
}

TEST_CASE("h0-all-rings graph is a subgraph of both degree-0 graphs") {
    for (const auto& d : {connected_sum_sphere_bundles(6, 2, 3), spun_torus_family(7, 2),
                          two_component_special_generic(6, 3), special_generic_sphere(5, 3)}) {
        RegionGraph all_rings = h0_all_rings_graph(d);
        RegionGraph z = build_graph(d, 0, Ring::Integers);
        RegionGraph z2 = build_graph(d, 0, Ring::ModTwo);
        for (const auto& e : all_rings.edges) {
            CHECK(z.has_edge(e.first, e.second));
            CHECK(z2.has_edge(e.first, e.second));
        }
    }
}

TEST_CASE("h0 edges on pinned transitions") {
    // Disc normal fiber with connected boundary on both sides: edge present.
    FoldMapDescriptor d = two_component_special_generic(6, 3);
    RegionGraph h0 = h0_all_rings_graph(d);
    CHECK(h0.edges == std::vector<std::pair<int, int>>{{1, 0}, {1, 2}});

    // A three-holed sphere seen from one of its boundary spheres: the fiber
    // is connected, so the component map is onto.
    FoldMapDescriptor sum = connected_sum_sphere_bundles(6, 2, 2);
    RegionGraph h0sum = h0_all_rings_graph(sum);
    CHECK(h0sum.has_edge(1, 0));  // outer boundary sphere onto the pants
    CHECK(h0sum.has_edge(0, 1));
    // Empty boundary fiber: edge absent.
    CHECK_FALSE(h0sum.has_edge(2, 1));
}

TEST_CASE("build_graph is deterministic and checks its inputs") {
    FoldMapDescriptor d = connected_sum_sphere_bundles(6, 2, 2);
    CHECK(build_graph(d, 1, Ring::ModTwo) == build_graph(d, 1, Ring::ModTwo));
    CHECK_THROWS_AS(build_graph(d, 3, Ring::ModTwo), DomainError);

    d.singular[0].incl(Side::Inner, 1, Ring::ModTwo) = std::nullopt;
    CHECK_THROWS_AS(build_graph(d, 1, Ring::ModTwo), DescriptorIncompleteError);
}

TEST_CASE("dot export golden files") {
    auto check_golden = [](const RegionGraph& g, const std::string& path) {
        std::string expected = read_file(std::string(ROUNDFOLD_TESTS_DIR) + "/golden/" + path);
        CHECK(export_dot(g) == expected);
    };
    check_golden(build_graph(connected_sum_sphere_bundles(9, 4, 2), 1, Ring::ModTwo),
                 "csb_9_4_2_h1_z2.dot");
    check_golden(build_graph(connected_sum_sphere_bundles(5, 4, 3), 1, Ring::Integers),
                 "csb_5_4_3_h1_z.dot");
    check_golden(build_graph(spun_torus_family(7, 2), 2, Ring::Integers), "spun_torus_7_2_h2_z.dot");
}
