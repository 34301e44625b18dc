#include "roundfold/graphs.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "roundfold/textio.hpp"

namespace roundfold {

bool RegionGraph::has_edge(int from, int to) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

std::vector<bool> RegionGraph::reachable_from(const std::vector<int>& sources) const {
    std::vector<bool> seen(static_cast<size_t>(vertex_count), false);
    std::queue<int> queue;
    for (int s : sources) {
        if (s < 0 || s >= vertex_count) throw DomainError("vertex out of range: " + std::to_string(s));
        if (!seen[static_cast<size_t>(s)]) {
            seen[static_cast<size_t>(s)] = true;
            queue.push(s);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (const auto& [from, to] : edges)
            if (from == v && !seen[static_cast<size_t>(to)]) {
                seen[static_cast<size_t>(to)] = true;
                queue.push(to);
            }
    }
    return seen;
}

namespace {

std::vector<std::string> region_labels(const FoldMapDescriptor& d) {
    std::vector<std::string> labels;
    for (const Region& r : d.regions) labels.push_back(homology_expression(r.fiber));
    return labels;
}

void sort_edges(RegionGraph& g) { std::sort(g.edges.begin(), g.edges.end()); }

}  // namespace

RegionGraph build_graph(const FoldMapDescriptor& d, int degree, Ring ring) {
    require_valid(d, "build_graph");
    if (degree < 0 || degree >= kStoredDegrees)
        throw DomainError("build_graph: degree must be 0, 1 or 2");
    RegionGraph g;
    g.vertex_count = d.l + 1;
    g.degree = degree;
    g.ring = ring;
    g.kind = "(H_" + std::to_string(degree) + "," + ring_name(ring) + ")";
    g.vertex_labels = region_labels(d);
    for (const SingularComponent& s : d.singular) {
        const auto& inner = s.incl(Side::Inner, degree, ring);
        const auto& outer = s.incl(Side::Outer, degree, ring);
        if (!inner || !outer)
            throw DescriptorIncompleteError("singular " + std::to_string(s.index) +
                                            " is missing its inclusion map for H_" + std::to_string(degree) +
                                            " over " + ring_name(ring));
        if (is_surjective(*inner)) g.edges.emplace_back(s.index - 1, s.index);
        if (is_surjective(*outer)) g.edges.emplace_back(s.index, s.index - 1);
    }
    sort_edges(g);
    return g;
}

RegionGraph h0_all_rings_graph(const FoldMapDescriptor& d) {
    require_valid(d, "h0_all_rings_graph");
    RegionGraph g;
    g.vertex_count = d.l + 1;
    g.degree = 0;
    g.ring = Ring::Integers;
    g.kind = "(H_0,all-rings)";
    g.vertex_labels = region_labels(d);
    for (const SingularComponent& s : d.singular) {
        for (Side side : {Side::Inner, Side::Outer}) {
            const auto& h = s.incl(side, 0, Ring::Integers);
            if (!h)
                throw DescriptorIncompleteError("singular " + std::to_string(s.index) +
                                                " is missing its degree-0 integral map");
            // Component map onto: every normal-fiber component is hit.
            bool onto = true;
            for (int r = 0; r < h->matrix.rows && onto; ++r) {
                bool hit = false;
                for (int c = 0; c < h->matrix.cols; ++c)
                    if (h->matrix.at(r, c) != 0) hit = true;
                onto = hit;
            }
            if (onto) {
                if (side == Side::Inner)
                    g.edges.emplace_back(s.index - 1, s.index);
                else
                    g.edges.emplace_back(s.index, s.index - 1);
            }
        }
    }
    sort_edges(g);
    return g;
}

bool is_starting_set(const RegionGraph& g, const std::vector<int>& s) {
    if (s.empty()) throw DomainError("a starting set must be non-empty");
    auto reach = g.reachable_from(s);
    return std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
}

std::vector<std::vector<int>> minimal_starting_sets(const RegionGraph& g) {
    if (g.vertex_count > 21)
        throw DomainError("minimal_starting_sets: refusing exhaustive search beyond 21 vertices");
    const uint32_t limit = 1u << g.vertex_count;
    std::vector<uint32_t> starting;
    for (uint32_t mask = 1; mask < limit; ++mask) {
        std::vector<int> s;
        for (int v = 0; v < g.vertex_count; ++v)
            if (mask & (1u << v)) s.push_back(v);
        if (is_starting_set(g, s)) starting.push_back(mask);
    }
    std::vector<std::vector<int>> out;
    for (uint32_t mask : starting) {
        bool minimal = true;
        for (uint32_t other : starting)
            if (other != mask && (other & mask) == other) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        std::vector<int> s;
        for (int v = 0; v < g.vertex_count; ++v)
            if (mask & (1u << v)) s.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool start_equivalent(const RegionGraph& g1, const RegionGraph& g2, const std::vector<int>& s) {
    if (g1.vertex_count != g2.vertex_count)
        throw DomainError("start_equivalent: graphs live on different vertex sets");
    if (s.empty()) throw DomainError("start_equivalent: the set S must be non-empty");
    // The same witness s' must reach v in both graphs.
    std::vector<std::vector<bool>> reach1, reach2;
    for (int v : s) {
        reach1.push_back(g1.reachable_from({v}));
        reach2.push_back(g2.reachable_from({v}));
    }
    for (int v = 0; v < g1.vertex_count; ++v) {
        bool ok = false;
        for (size_t i = 0; i < s.size() && !ok; ++i)
            ok = reach1[i][static_cast<size_t>(v)] && reach2[i][static_cast<size_t>(v)];
        if (!ok) return false;
    }
    return true;
}

std::string export_dot(const RegionGraph& g) {
    std::ostringstream out;
    out << "digraph region_graph {\n";
    out << "  label=\"" << g.kind << "-graph\";\n";
    out << "  rankdir=LR;\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        out << "  r" << v << " [label=\"region " << v;
        if (v < static_cast<int>(g.vertex_labels.size())) out << "\\n" << g.vertex_labels[static_cast<size_t>(v)];
        out << "\"];\n";
    }
    for (const auto& [from, to] : g.edges) out << "  r" << from << " -> r" << to << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace roundfold
