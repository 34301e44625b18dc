#include "roundfold/pop.hpp"

#include <algorithm>
#include <sstream>

#include "roundfold/graphs.hpp"
#include "sum_layout.hpp"

namespace roundfold {

namespace {

using detail::generator_order;
using detail::GenLayout;
using detail::layout_from_orders;

// Order of the tensor of two cyclic generators: 0 encodes infinite order.
int64_t pair_order(int64_t a, int64_t b) {
    if (a == 0 && b == 0) return 0;
    if (a == 0) return b;
    if (b == 0) return a;
    return gcd_nonneg(a, b);
}

struct NaturalGen {
    int degree;   // degree on the descriptor side
    int gen;      // generator index on the descriptor side
    int f_gen;    // generator index on the fiber side (degree k - degree)
    int64_t order;
};

std::vector<NaturalGen> enumerate_pairs(int k, const std::vector<AbGroup>& x_groups,
                                        const std::vector<AbGroup>& f_groups) {
    std::vector<NaturalGen> out;
    for (int p = 0; p <= k; ++p) {
        const AbGroup& xg = x_groups[static_cast<size_t>(p)];
        const AbGroup& fg = f_groups[static_cast<size_t>(k - p)];
        for (int i = 0; i < xg.generators(); ++i)
            for (int j = 0; j < fg.generators(); ++j)
                out.push_back({p, i, j, pair_order(generator_order(xg, i), generator_order(fg, j))});
    }
    return out;
}

// (old map in degree p) tensor (identity on H_{k-p}(F)), summed over p. The
// generator bookkeeping follows layout_from_orders on both sides.
HomMatrix kunneth_hom(int k, Ring ring, const std::vector<const HomMatrix*>& maps_by_degree,
                      const std::vector<AbGroup>& src_groups, const std::vector<AbGroup>& dst_groups,
                      const std::vector<AbGroup>& f_groups) {
    std::vector<NaturalGen> source = enumerate_pairs(k, src_groups, f_groups);
    std::vector<NaturalGen> target = enumerate_pairs(k, dst_groups, f_groups);
    std::vector<int64_t> src_orders, dst_orders;
    for (const NaturalGen& g : source) src_orders.push_back(g.order);
    for (const NaturalGen& g : target) dst_orders.push_back(g.order);
    GenLayout src_layout = layout_from_orders(src_orders);
    GenLayout dst_layout = layout_from_orders(dst_orders);

    IntMatrix m(dst_layout.group.generators(), src_layout.group.generators());
    for (size_t r = 0; r < target.size(); ++r) {
        if (dst_layout.position[r] < 0) continue;
        for (size_t c = 0; c < source.size(); ++c) {
            if (src_layout.position[c] < 0) continue;
            const NaturalGen& tg = target[r];
            const NaturalGen& sg = source[c];
            if (tg.degree != sg.degree || tg.f_gen != sg.f_gen) continue;
            m.at(dst_layout.position[r], src_layout.position[c]) =
                maps_by_degree[static_cast<size_t>(tg.degree)]->matrix.at(tg.gen, sg.gen);
        }
    }
    return HomMatrix(src_layout.group, dst_layout.group, std::move(m), ring);
}

std::vector<AbGroup> groups_up_to(const ManifoldHomology& m, int k, Ring ring) {
    std::vector<AbGroup> out;
    for (int p = 0; p <= k; ++p) out.push_back(m.group(p, ring));
    return out;
}

POperationResult apply_core(const FoldMapDescriptor& d, const ManifoldHomology& fiber,
                            std::string provenance, std::optional<ApplicabilityReport> report) {
    require_valid(d, "apply_p_operation");
    if (!d.flags.l_trivial) throw DomainError("apply_p_operation: descriptor must be L-trivial");
    if (fiber.is_empty()) throw DomainError("apply_p_operation: the fiber F must be non-empty");

    FoldMapDescriptor out;
    out.m = d.m + fiber.dim;
    out.n = d.n;
    out.l = d.l;
    out.image_kind = d.image_kind;
    out.flags.l_trivial = true;
    out.flags.s_trivial = std::nullopt;  // a geometric condition; set only by family reports

    for (const Region& r : d.regions) out.regions.push_back({r.index, kunneth_with(r.fiber, fiber)});

    for (const SingularComponent& s : d.singular) {
        SingularComponent ns;
        ns.index = s.index;
        ns.normal_fiber = kunneth_with(s.normal_fiber, fiber);
        ns.inner_boundary_fiber = out.regions[static_cast<size_t>(s.index) - 1].fiber;
        ns.outer_boundary_fiber = out.regions[static_cast<size_t>(s.index)].fiber;
        for (Side side : {Side::Inner, Side::Outer}) {
            const ManifoldHomology& old_boundary =
                side == Side::Inner ? s.inner_boundary_fiber : s.outer_boundary_fiber;
            for (int k = 0; k < kStoredDegrees; ++k)
                for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
                    std::vector<const HomMatrix*> maps;
                    bool complete = true;
                    for (int p = 0; p <= k; ++p) {
                        const auto& h = s.incl(side, p, ring);
                        if (!h) {
                            complete = false;
                            break;
                        }
                        maps.push_back(&*h);
                    }
                    if (!complete) continue;
                    ns.incl(side, k, ring) =
                        kunneth_hom(k, ring, maps, groups_up_to(old_boundary, k, ring),
                                    groups_up_to(s.normal_fiber, k, ring), groups_up_to(fiber, k, ring));
                }
        }
        out.singular.push_back(std::move(ns));
    }
    require_valid(out, "apply_p_operation result");
    return {std::move(out), fiber, std::move(provenance), std::move(report)};
}

}  // namespace

POperationResult apply_p_operation(const FoldMapDescriptor& d, const ManifoldHomology& fiber,
                                   const ApplicabilityReport& report) {
    if (!report.applicable)
        throw DomainError("apply_p_operation: the applicability report rejects this bundle (" +
                          report.rule + ")");
    std::ostringstream provenance;
    provenance << "P-operation by " << fiber.label << " on an m=" << d.m << ", n=" << d.n
               << ", l=" << d.l << " round fold map; certified by " << report.rule;
    return apply_core(d, fiber, provenance.str(), report);
}

POperationResult apply_p_operation_trivial(const FoldMapDescriptor& d, const ManifoldHomology& fiber) {
    std::ostringstream provenance;
    provenance << "P-operation by " << fiber.label << " on an m=" << d.m << ", n=" << d.n
               << ", l=" << d.l << " round fold map; bundle declared trivial over every f^-1(N(C))";
    return apply_core(d, fiber, provenance.str(), std::nullopt);
}

std::string family_name(S1Family f) {
    switch (f) {
        case S1Family::Thm5: return "thm5";
        case S1Family::Thm6: return "thm6";
        case S1Family::Thm7: return "thm7";
        case S1Family::Thm8: return "thm8";
    }
    return "?";
}

S1Family recognize_family(const FoldMapDescriptor& d) {
    require_valid(d, "recognize_family");
    std::vector<int> pattern;
    for (const Region& r : d.regions) pattern.push_back(r.fiber.components);
    if (d.image_kind == ImageKind::Annulus && pattern == std::vector<int>{0, 1, 2, 1, 0})
        return S1Family::Thm6;
    if (d.image_kind == ImageKind::Disc && pattern == std::vector<int>{1, 2, 1, 0}) return S1Family::Thm7;
    if (d.image_kind == ImageKind::Disc && pattern == std::vector<int>{1, 2, 1, 2, 1, 0})
        return S1Family::Thm8;
    if (d.image_kind == ImageKind::Disc && d.n == 2 && d.m == 4) {
        bool descending = true;
        for (size_t i = 0; i < pattern.size(); ++i)
            if (pattern[i] != d.l - static_cast<int>(i)) descending = false;
        if (descending) return S1Family::Thm5;
    }
    throw DomainError("unrecognized section-4 family (image " + image_kind_name(d.image_kind) +
                      ", l=" + std::to_string(d.l) + ")");
}

S1FamilyReport s1_family_report(const FoldMapDescriptor& d, const S1FamilyInput& input) {
    S1FamilyReport out;
    out.family = recognize_family(d);

    // The family bundles are orientable with euler class vanishing on every
    // distinguished fiber class, and restrict trivially over the boundary
    // spheres and tori in play (the fibers there have no H^1 or H^2 to carry
    // an obstruction for m-n >= 3; for thm5 the constraint is checked below).
    BundleDescriptor b = BundleDescriptor::trivial();
    std::vector<int> s{0};

    std::ostringstream text;
    switch (out.family) {
        case S1Family::Thm6: {
            if (input.ks.size() != 1) throw DomainError("thm6 family needs one euler number k");
            FamilyReport fr = family_h1_theorem6(input.ks[0], d.m);
            ApplicabilityReport report = check_auto(d, b, s);
            out.op = apply_p_operation(d, sphere(1), report);
            out.op.result.flags.s_trivial = fr.s_trivial;
            text << "family: thm6\n";
            text << fr.description << "\n";
            text << "p-operation by S^1: " << report.str() << "\n";
            text << "H_1 of the circle-bundle piece: " << fr.h1.str() << "\n";
            text << "axis preimage: " << fr.axis_preimage << "\n";
            text << "L-trivial: true\n";
            text << "S-trivial: " << (fr.s_trivial ? "true" : "false") << "\n";
            out.homology = std::move(fr);
            break;
        }
        case S1Family::Thm7: {
            if (input.ks.size() != 1) throw DomainError("thm7 family needs one euler number k");
            FamilyReport fr = family_h1_theorem7(input.ks[0]);
            ApplicabilityReport report = check_auto(d, b, s);
            out.op = apply_p_operation(d, sphere(1), report);
            out.op.result.flags.s_trivial = fr.s_trivial;
            text << "family: thm7\n";
            text << fr.description << "\n";
            text << "p-operation by S^1: " << report.str() << "\n";
            text << "H_1(M_" << input.ks[0] << ";Z): " << fr.h1.str() << "\n";
            text << "H_1 of the restriction over the proper-core complement: "
                 << fr.restriction_h1[0].str() << "\n";
            text << "axis preimage: " << fr.axis_preimage << "\n";
            text << "L-trivial: true\n";
            text << "S-trivial: " << (fr.s_trivial ? "true" : "false") << "\n";
            out.homology = std::move(fr);
            break;
        }
        case S1Family::Thm8: {
            if (input.ks.size() != 2) throw DomainError("thm8 family needs euler numbers k1 and k2");
            FamilyReport fr = family_h1_theorem8(input.ks[0], input.ks[1]);
            ApplicabilityReport report = check_auto(d, b, s);
            out.op = apply_p_operation(d, sphere(1), report);
            out.op.result.flags.s_trivial = fr.s_trivial;
            text << "family: thm8\n";
            text << fr.description << "\n";
            text << "p-operation by S^1: " << report.str() << "\n";
            text << "H_1(M_(" << input.ks[0] << "," << input.ks[1] << ");Z): " << fr.h1.str() << "\n";
            text << "H_1 of the restriction over piece 1: " << fr.restriction_h1[0].str() << "\n";
            text << "H_1 of the restriction over piece 2: " << fr.restriction_h1[1].str() << "\n";
            text << "axis preimage: " << fr.axis_preimage << "\n";
            text << "L-trivial: true\n";
            text << "S-trivial: " << (fr.s_trivial ? "true" : "false") << "\n";
            out.homology = std::move(fr);
            break;
        }
        case S1Family::Thm5: {
            if (!input.base) throw DomainError("thm5 family needs the four-manifold factor list");
            const FourManifold& base = *input.base;
            if (base.b2 != 2 * d.l)
                throw DomainError("thm5 family: factor count must match the number of summands l");
            if (static_cast<int>(input.alpha.size()) != base.b2)
                throw DomainError("thm5 family: alpha must have length " + std::to_string(base.b2));
            if (!theorem5_alpha_constraint(base, input.alpha))
                throw DomainError("thm5 family: alpha must vanish on every fiber class");
            ApplicabilityReport report = check_auto(d, b, s);
            out.op = apply_p_operation(d, sphere(1), report);
            GysinResult gysin = gysin_h_star(base, input.alpha);
            bool simply = is_simply_connected_total_space(base, input.alpha);
            text << "family: thm5\n";
            text << "p-operation by S^1: " << report.str() << "\n";
            text << "euler class coordinates: [";
            for (size_t i = 0; i < input.alpha.size(); ++i) {
                if (i) text << ",";
                text << input.alpha[i];
            }
            text << "]\n";
            text << "H_1(M(alpha);Z): " << gysin.h1.str() << "\n";
            text << "H_2(M(alpha);Z): " << gysin.h2.str() << "\n";
            text << "simply connected: " << (simply ? "true" : "false") << "\n";
            if (simply) {
                FiveManifoldClass cls = classify_five_manifold(base, input.alpha);
                text << "diffeomorphism type: " << cls.str() << "\n";
                out.five_class = cls;
            }
            break;
        }
    }
    out.text = text.str();
    return out;
}

}  // namespace roundfold
