#include "roundfold/foldmap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "roundfold/textio.hpp"
#include "sum_layout.hpp"

namespace roundfold {

std::string image_kind_name(ImageKind k) {
    switch (k) {
        case ImageKind::Disc: return "disc";
        case ImageKind::Annulus: return "annulus";
        case ImageKind::FullPlaneComplement: return "full-plane-complement";
    }
    return "?";
}

const std::optional<HomMatrix>& SingularComponent::incl(Side side, int degree, Ring ring) const {
    const auto& table = side == Side::Inner ? incl_inner : incl_outer;
    return table[static_cast<size_t>(degree)][ring == Ring::Integers ? 0 : 1];
}

std::optional<HomMatrix>& SingularComponent::incl(Side side, int degree, Ring ring) {
    auto& table = side == Side::Inner ? incl_inner : incl_outer;
    return table[static_cast<size_t>(degree)][ring == Ring::Integers ? 0 : 1];
}

bool operator==(const SingularComponent& a, const SingularComponent& b) {
    return a.index == b.index && a.normal_fiber.same_homology(b.normal_fiber) &&
           a.inner_boundary_fiber.same_homology(b.inner_boundary_fiber) &&
           a.outer_boundary_fiber.same_homology(b.outer_boundary_fiber) &&
           a.incl_inner == b.incl_inner && a.incl_outer == b.incl_outer;
}

bool operator==(const FoldMapDescriptor& a, const FoldMapDescriptor& b) {
    if (a.m != b.m || a.n != b.n || a.l != b.l || a.image_kind != b.image_kind || !(a.flags == b.flags))
        return false;
    if (a.regions.size() != b.regions.size() || a.singular.size() != b.singular.size()) return false;
    for (size_t i = 0; i < a.regions.size(); ++i) {
        if (a.regions[i].index != b.regions[i].index) return false;
        if (!a.regions[i].fiber.same_homology(b.regions[i].fiber)) return false;
    }
    for (size_t i = 0; i < a.singular.size(); ++i)
        if (!(a.singular[i] == b.singular[i])) return false;
    return true;
}

namespace {

bool is_component_map(const IntMatrix& m) {
    for (int c = 0; c < m.cols; ++c) {
        int ones = 0;
        for (int r = 0; r < m.rows; ++r) {
            int64_t v = m.at(r, c);
            if (v == 1)
                ++ones;
            else if (v != 0)
                return false;
        }
        if (ones != 1) return false;
    }
    return true;
}

}  // namespace

std::vector<Diagnostic> validate(const FoldMapDescriptor& d) {
    std::vector<Diagnostic> out;
    auto bad = [&out](const std::string& field, const std::string& message) {
        out.push_back({field, message});
    };

    if (!(d.m >= d.n && d.n >= 2)) bad("map", "requires m >= n >= 2");
    if (d.l < 1) bad("map.l", "at least one singular component is required");
    if (static_cast<int>(d.regions.size()) != d.l + 1)
        bad("regions", "expected " + std::to_string(d.l + 1) + " regions, found " +
                           std::to_string(d.regions.size()));
    if (static_cast<int>(d.singular.size()) != d.l)
        bad("singular", "expected " + std::to_string(d.l) + " singular components, found " +
                            std::to_string(d.singular.size()));
    for (size_t i = 0; i < d.regions.size(); ++i) {
        const Region& r = d.regions[i];
        std::string field = "region " + std::to_string(i);
        if (r.index != static_cast<int>(i)) bad(field, "regions must be indexed 0..l innermost to outermost");
        if (!r.fiber.is_empty()) {
            if (r.fiber.dim != d.m - d.n)
                bad(field, "regular fiber dimension must be m-n = " + std::to_string(d.m - d.n));
            AbGroup h0 = r.fiber.group(0, Ring::Integers);
            if (!h0.torsion.empty() || h0.rank != r.fiber.components)
                bad(field, "H_0 must be free of rank = number of components");
        }
    }
    if (!d.regions.empty() && static_cast<int>(d.regions.size()) == d.l + 1) {
        const bool inner_empty = d.regions.front().fiber.is_empty();
        const bool outer_empty = d.regions.back().fiber.is_empty();
        switch (d.image_kind) {
            case ImageKind::Disc:
                if (inner_empty) bad("map.image", "disc image requires a non-empty proper-core fiber");
                if (!outer_empty) bad("map.image", "disc image requires an empty unbounded-region fiber");
                break;
            case ImageKind::Annulus:
                if (!inner_empty) bad("map.image", "annulus image requires an empty proper-core fiber");
                if (!outer_empty) bad("map.image", "annulus image requires an empty unbounded-region fiber");
                if (d.l < 2) bad("map.image", "annulus image needs at least two singular components");
                break;
            case ImageKind::FullPlaneComplement:
                if (outer_empty)
                    bad("map.image", "full-plane-complement requires a non-empty unbounded-region fiber");
                break;
        }
    }

    for (size_t i = 0; i < d.singular.size(); ++i) {
        const SingularComponent& s = d.singular[i];
        std::string field = "singular " + std::to_string(i + 1);
        if (s.index != static_cast<int>(i) + 1) bad(field, "singular components must be indexed 1..l");
        if (s.normal_fiber.is_empty()) {
            bad(field, "normal fiber must be non-empty");
            continue;
        }
        if (s.normal_fiber.dim != d.m - d.n + 1)
            bad(field, "normal fiber dimension must be m-n+1 = " + std::to_string(d.m - d.n + 1));
        if (i < d.regions.size() && !s.inner_boundary_fiber.same_homology(d.regions[i].fiber))
            bad(field, "inner boundary fiber must equal the fiber of region " + std::to_string(i));
        if (i + 1 < d.regions.size() && !s.outer_boundary_fiber.same_homology(d.regions[i + 1].fiber))
            bad(field, "outer boundary fiber must equal the fiber of region " + std::to_string(i + 1));
        for (Side side : {Side::Inner, Side::Outer}) {
            const ManifoldHomology& boundary =
                side == Side::Inner ? s.inner_boundary_fiber : s.outer_boundary_fiber;
            const char* side_name = side == Side::Inner ? "inner" : "outer";
            for (int k = 0; k < kStoredDegrees; ++k)
                for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
                    const auto& h = s.incl(side, k, ring);
                    if (!h) continue;
                    std::string where = field + "." + side_name + ".h" + std::to_string(k) + "." +
                                        (ring == Ring::Integers ? "z" : "z2");
                    if (h->ring != ring) bad(where, "stored ring does not match slot");
                    if (h->source != boundary.group(k, ring))
                        bad(where, "source group must be H_" + std::to_string(k) + " of the boundary fiber");
                    if (h->target != s.normal_fiber.group(k, ring))
                        bad(where, "target group must be H_" + std::to_string(k) + " of the normal fiber");
                    if (k == 0 && !is_component_map(h->matrix))
                        bad(where, "degree-0 map must send each component to a single component");
                }
        }
    }
    return out;
}

void require_valid(const FoldMapDescriptor& d, const std::string& context) {
    auto diagnostics = validate(d);
    if (!diagnostics.empty())
        throw DomainError(context + ": descriptor does not validate (" + diagnostics.front().field +
                          ": " + diagnostics.front().message + ")");
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

bool is_connected_source(const FoldMapDescriptor& d) {
    // Nodes: one per fiber component per region, one per normal-fiber
    // component per singular component. The degree-0 maps are component maps
    // and glue them together.
    std::vector<int> region_base(d.regions.size(), -1);
    std::vector<int> singular_base(d.singular.size(), -1);
    int total = 0;
    for (size_t i = 0; i < d.regions.size(); ++i) {
        region_base[i] = total;
        total += d.regions[i].fiber.components;
    }
    for (size_t i = 0; i < d.singular.size(); ++i) {
        singular_base[i] = total;
        total += d.singular[i].normal_fiber.components;
    }
    if (total == 0) return false;
    UnionFind uf(total);
    for (size_t i = 0; i < d.singular.size(); ++i) {
        const SingularComponent& s = d.singular[i];
        for (Side side : {Side::Inner, Side::Outer}) {
            const auto& h = s.incl(side, 0, Ring::Integers);
            if (!h)
                throw DomainError("is_connected_source: singular " + std::to_string(s.index) +
                                  " is missing its degree-0 integral map");
            size_t region_index = side == Side::Inner ? i : i + 1;
            for (int c = 0; c < h->matrix.cols; ++c)
                for (int r = 0; r < h->matrix.rows; ++r)
                    if (h->matrix.at(r, c) == 1)
                        uf.unite(region_base[region_index] + c, singular_base[i] + r);
        }
    }
    int root = uf.find(0);
    for (int v = 1; v < total; ++v)
        if (uf.find(v) != root) return false;
    return true;
}

// ---- catalog --------------------------------------------------------------

namespace {

ManifoldHomology copies_of(const ManifoldHomology& x, int count) {
    if (count == 0) return ManifoldHomology::empty();
    ManifoldHomology out = x;
    for (int i = 1; i < count; ++i) out = disjoint_union(out, x);
    return out;
}

// Folding all copies of H onto one target copy: the inclusion of a disjoint
// union of parallel copies. Natural generators run copy-major so the layout
// matches what the P-operation rewriter produces for sphere(0) x H.
HomMatrix fold_copies(const AbGroup& summand, int copies, Ring ring) {
    std::vector<int64_t> orders;
    for (int copy = 0; copy < copies; ++copy)
        for (int g = 0; g < summand.generators(); ++g)
            orders.push_back(detail::generator_order(summand, g));
    detail::GenLayout layout = detail::layout_from_orders(orders);
    IntMatrix m(summand.generators(), layout.group.generators());
    for (int copy = 0; copy < copies; ++copy)
        for (int g = 0; g < summand.generators(); ++g) {
            int slot = layout.position[static_cast<size_t>(copy * summand.generators() + g)];
            if (slot >= 0) m.at(g, slot) = 1;
        }
    return HomMatrix(layout.group, summand, std::move(m), ring);
}

enum class PieceKind { MergePants, SplitPants, DeathDisc, BirthDisc, Cylinder };

int inner_slots(PieceKind k) {
    switch (k) {
        case PieceKind::MergePants: return 2;
        case PieceKind::SplitPants: return 1;
        case PieceKind::DeathDisc: return 1;
        case PieceKind::BirthDisc: return 0;
        case PieceKind::Cylinder: return 1;
    }
    return 0;
}

int outer_slots(PieceKind k) {
    switch (k) {
        case PieceKind::MergePants: return 1;
        case PieceKind::SplitPants: return 2;
        case PieceKind::DeathDisc: return 0;
        case PieceKind::BirthDisc: return 1;
        case PieceKind::Cylinder: return 1;
    }
    return 0;
}

bool is_pants(PieceKind k) { return k == PieceKind::MergePants || k == PieceKind::SplitPants; }

// A singular component whose boundary fibers are unions of spheres S^j and
// whose normal fiber splits into discs, cylinders and three-holed spheres.
// Builds all stored inclusion maps. The two independent H_j classes of a
// three-holed sphere are the first two boundary sphere classes; the third
// bounds their negative sum. A cylinder carries a single H_j class hit by
// both of its boundary spheres.
SingularComponent sphere_transition(int j, int index, const std::vector<PieceKind>& pieces) {
    SingularComponent s;
    s.index = index;

    int inner_count = 0, outer_count = 0, hj_rank = 0;
    for (PieceKind k : pieces) {
        inner_count += inner_slots(k);
        outer_count += outer_slots(k);
        if (is_pants(k)) hj_rank += 2;
        if (k == PieceKind::Cylinder) hj_rank += 1;
    }

    ManifoldHomology piece_union;
    for (PieceKind k : pieces) {
        ManifoldHomology piece = is_pants(k)                  ? sphere_minus_discs(j + 1, 3)
                                 : k == PieceKind::Cylinder   ? sphere_minus_discs(j + 1, 2)
                                                              : disc(j + 1);
        piece_union = piece_union.is_empty() ? piece : disjoint_union(piece_union, piece);
    }
    s.normal_fiber = piece_union;
    s.inner_boundary_fiber = copies_of(sphere(j), inner_count);
    s.outer_boundary_fiber = copies_of(sphere(j), outer_count);

    for (Side side : {Side::Inner, Side::Outer}) {
        const int count = side == Side::Inner ? inner_count : outer_count;
        // Degree 0: each sphere copy lands in the component of its piece.
        IntMatrix h0(static_cast<int>(pieces.size()), count);
        // Degree j (when stored): spheres hit the pants/cylinder classes.
        IntMatrix hj(hj_rank, count);
        int slot = 0, row0 = 0, hj_row = 0;
        for (PieceKind k : pieces) {
            const int slots = side == Side::Inner ? inner_slots(k) : outer_slots(k);
            const bool two_slot_side = slots == 2;
            for (int i = 0; i < slots; ++i, ++slot) {
                h0.at(row0, slot) = 1;
                if (is_pants(k)) {
                    if (two_slot_side) {
                        hj.at(hj_row + i, slot) = 1;
                    } else {
                        hj.at(hj_row, slot) = -1;
                        hj.at(hj_row + 1, slot) = -1;
                    }
                } else if (k == PieceKind::Cylinder) {
                    hj.at(hj_row, slot) = 1;
                }
            }
            if (is_pants(k)) hj_row += 2;
            if (k == PieceKind::Cylinder) hj_row += 1;
            ++row0;
        }
        const ManifoldHomology& boundary =
            side == Side::Inner ? s.inner_boundary_fiber : s.outer_boundary_fiber;
        for (int degree = 0; degree < kStoredDegrees; ++degree)
            for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
                AbGroup src = boundary.group(degree, ring);
                AbGroup dst = s.normal_fiber.group(degree, ring);
                HomMatrix h = HomMatrix::zero(src, dst, ring);
                if (degree == 0)
                    h = HomMatrix(src, dst, h0, ring);
                else if (degree == j)
                    h = HomMatrix(src, dst, hj, ring);
                s.incl(side, degree, ring) = std::move(h);
            }
    }
    return s;
}

// Normal fiber is a single disc; every boundary sphere maps to its one
// component and all higher maps are forced zero. Works for j = 0 as well.
SingularComponent disc_transition(int index, const ManifoldHomology& inner,
                                  const ManifoldHomology& outer, int fiber_dim) {
    SingularComponent s;
    s.index = index;
    s.normal_fiber = disc(fiber_dim);
    s.inner_boundary_fiber = inner;
    s.outer_boundary_fiber = outer;
    for (Side side : {Side::Inner, Side::Outer}) {
        const ManifoldHomology& boundary = side == Side::Inner ? inner : outer;
        for (int degree = 0; degree < kStoredDegrees; ++degree)
            for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
                AbGroup src = boundary.group(degree, ring);
                AbGroup dst = s.normal_fiber.group(degree, ring);
                IntMatrix m(dst.generators(), src.generators());
                if (degree == 0)
                    for (int c = 0; c < m.cols; ++c) m.at(0, c) = 1;
                s.incl(side, degree, ring) = HomMatrix(src, dst, std::move(m), ring);
            }
    }
    return s;
}

void check_param(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

std::vector<Region> make_regions(const std::vector<ManifoldHomology>& fibers) {
    std::vector<Region> out;
    for (size_t i = 0; i < fibers.size(); ++i) out.push_back({static_cast<int>(i), fibers[i]});
    return out;
}

}  // namespace

FoldMapDescriptor special_generic_sphere(int m, int n) {
    check_param(m >= n && n >= 2, "special_generic_sphere requires m >= n >= 2");
    FoldMapDescriptor d;
    d.m = m;
    d.n = n;
    d.l = 1;
    d.image_kind = ImageKind::Disc;
    d.flags = {true, true};
    ManifoldHomology f = sphere(m - n);
    d.regions = make_regions({f, ManifoldHomology::empty()});
    d.singular = {disc_transition(1, f, ManifoldHomology::empty(), m - n + 1)};
    return d;
}

FoldMapDescriptor bundle_over_sphere(const ManifoldHomology& fiber, int n) {
    check_param(n >= 2, "bundle_over_sphere requires n >= 2");
    check_param(!fiber.is_empty() && fiber.components == 1,
                "bundle_over_sphere requires a non-empty connected fiber");
    FoldMapDescriptor d;
    d.m = n + std::max(fiber.dim, 0);
    d.n = n;
    d.l = 1;
    d.image_kind = ImageKind::Disc;
    d.flags = {true, true};
    d.regions = make_regions({disjoint_union(fiber, fiber), ManifoldHomology::empty()});

    SingularComponent s;
    s.index = 1;
    // The axis preimage is fiber x [0,1]; homotopy type of the fiber itself.
    s.normal_fiber = kunneth_with(fiber, disc(1));
    s.inner_boundary_fiber = d.regions[0].fiber;
    s.outer_boundary_fiber = ManifoldHomology::empty();
    for (int degree = 0; degree < kStoredDegrees; ++degree)
        for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
            AbGroup dst = s.normal_fiber.group(degree, ring);
            s.incl(Side::Inner, degree, ring) = fold_copies(dst, 2, ring);
            s.incl(Side::Outer, degree, ring) =
                HomMatrix::zero(AbGroup::zero(), dst, ring);
        }
    d.singular = {std::move(s)};
    return d;
}

FoldMapDescriptor connected_sum_sphere_bundles(int m, int n, int l) {
    check_param(n >= 2 && m > n, "connected_sum_sphere_bundles requires m > n >= 2");
    check_param(l >= 1, "connected_sum_sphere_bundles requires l >= 1");
    const int j = m - n;
    FoldMapDescriptor d;
    d.m = m;
    d.n = n;
    d.l = l;
    d.image_kind = ImageKind::Disc;
    d.flags = {true, std::nullopt};

    std::vector<ManifoldHomology> fibers;
    for (int k = 0; k <= l; ++k) fibers.push_back(copies_of(sphere(j), l - k));
    d.regions = make_regions(fibers);

    for (int k = 1; k <= l; ++k) {
        std::vector<PieceKind> pieces;
        if (k < l) {
            // One pair of components merges; the remaining l-k-1 spheres pass
            // through on cylinder pieces.
            pieces.push_back(PieceKind::MergePants);
            for (int i = 0; i < l - k - 1; ++i) pieces.push_back(PieceKind::Cylinder);
        } else {
            pieces.push_back(PieceKind::DeathDisc);
        }
        d.singular.push_back(sphere_transition(j, k, pieces));
    }
    return d;
}

FoldMapDescriptor two_component_special_generic(int m, int n) {
    check_param(m >= n && n >= 2, "two_component_special_generic requires m >= n >= 2");
    FoldMapDescriptor d;
    d.m = m;
    d.n = n;
    d.l = 2;
    d.image_kind = ImageKind::Annulus;
    d.flags = {true, true};
    ManifoldHomology f = sphere(m - n);
    ManifoldHomology none = ManifoldHomology::empty();
    d.regions = make_regions({none, f, none});
    d.singular = {disc_transition(1, none, f, m - n + 1), disc_transition(2, f, none, m - n + 1)};
    return d;
}

FoldMapDescriptor spun_torus_family(int m, int n) {
    check_param(n >= 2 && m > n, "spun_torus_family requires m > n >= 2");
    const int j = m - n;
    FoldMapDescriptor d;
    d.m = m;
    d.n = n;
    d.l = 4;
    d.image_kind = ImageKind::Annulus;
    d.flags = {true, std::nullopt};
    ManifoldHomology none = ManifoldHomology::empty();
    d.regions = make_regions({none, copies_of(sphere(j), 1), copies_of(sphere(j), 2),
                              copies_of(sphere(j), 1), none});
    d.singular = {sphere_transition(j, 1, {PieceKind::BirthDisc}),
                  sphere_transition(j, 2, {PieceKind::SplitPants}),
                  sphere_transition(j, 3, {PieceKind::MergePants}),
                  sphere_transition(j, 4, {PieceKind::DeathDisc})};
    return d;
}

FoldMapDescriptor spun_disc_family(int m, int n) {
    check_param(n >= 2 && m > n, "spun_disc_family requires m > n >= 2");
    const int j = m - n;
    FoldMapDescriptor d;
    d.m = m;
    d.n = n;
    d.l = 3;
    d.image_kind = ImageKind::Disc;
    d.flags = {true, std::nullopt};
    d.regions = make_regions({copies_of(sphere(j), 1), copies_of(sphere(j), 2),
                              copies_of(sphere(j), 1), ManifoldHomology::empty()});
    d.singular = {sphere_transition(j, 1, {PieceKind::SplitPants}),
                  sphere_transition(j, 2, {PieceKind::MergePants}),
                  sphere_transition(j, 3, {PieceKind::DeathDisc})};
    return d;
}

FoldMapDescriptor case3_connected_sum(int m, int n) {
    check_param(n >= 2 && m >= 2 * n, "case3_connected_sum requires m >= 2n and n >= 2");
    check_param(m - n >= 3, "case3_connected_sum requires m - n >= 3");
    const int j = m - n;
    FoldMapDescriptor d;
    d.m = m;
    d.n = n;
    d.l = 5;
    d.image_kind = ImageKind::Disc;
    d.flags = {true, std::nullopt};
    d.regions = make_regions({copies_of(sphere(j), 1), copies_of(sphere(j), 2),
                              copies_of(sphere(j), 1), copies_of(sphere(j), 2),
                              copies_of(sphere(j), 1), ManifoldHomology::empty()});
    d.singular = {sphere_transition(j, 1, {PieceKind::SplitPants}),
                  sphere_transition(j, 2, {PieceKind::MergePants}),
                  sphere_transition(j, 3, {PieceKind::SplitPants}),
                  sphere_transition(j, 4, {PieceKind::MergePants}),
                  sphere_transition(j, 5, {PieceKind::DeathDisc})};
    return d;
}

namespace {

int to_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("catalog: parameter '" + s + "' for " + what + " is not an integer");
    }
}

}  // namespace

FoldMapDescriptor catalog(const std::string& name, const std::vector<std::string>& params) {
    auto want = [&](size_t count) {
        if (params.size() != count)
            throw DomainError("catalog " + name + " expects " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "special_generic_sphere") {
        want(2);
        return special_generic_sphere(to_int(params[0], "m"), to_int(params[1], "n"));
    }
    if (name == "bundle_over_sphere") {
        want(2);
        return bundle_over_sphere(parse_homology_expression(params[0]), to_int(params[1], "n"));
    }
    if (name == "connected_sum_sphere_bundles") {
        want(3);
        return connected_sum_sphere_bundles(to_int(params[0], "m"), to_int(params[1], "n"),
                                            to_int(params[2], "l"));
    }
    if (name == "two_component_special_generic") {
        want(2);
        return two_component_special_generic(to_int(params[0], "m"), to_int(params[1], "n"));
    }
    if (name == "spun_torus_family") {
        want(2);
        return spun_torus_family(to_int(params[0], "m"), to_int(params[1], "n"));
    }
    if (name == "spun_disc_family") {
        want(2);
        return spun_disc_family(to_int(params[0], "m"), to_int(params[1], "n"));
    }
    if (name == "case3_connected_sum") {
        want(2);
        return case3_connected_sum(to_int(params[0], "m"), to_int(params[1], "n"));
    }
    throw DomainError("catalog: unknown name '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"special_generic_sphere",    "bundle_over_sphere",
            "connected_sum_sphere_bundles", "two_component_special_generic",
            "spun_torus_family",         "spun_disc_family",
            "case3_connected_sum"};
}

}  // namespace roundfold
