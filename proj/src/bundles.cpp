#include "roundfold/bundles.hpp"

#include <algorithm>
#include <sstream>

namespace roundfold {

BundleDescriptor BundleDescriptor::trivial() {
    BundleDescriptor b;
    b.orientable = true;
    b.w1_default = 0;
    b.euler_default = 0;
    b.section_default = true;
    b.torus_default = true;
    return b;
}

int BundleDescriptor::w1_on(int region, int gen) const {
    auto it = w1.find({region, gen});
    if (it != w1.end()) return it->second;
    if (w1_default) return *w1_default;
    if (orientable) return 0;
    throw MissingBundleDataError("missing w1 value for region " + std::to_string(region) +
                                 ", generator " + std::to_string(gen));
}

int64_t BundleDescriptor::euler_on(int region, int gen) const {
    if (!orientable) throw DomainError("euler class queried on a non-orientable bundle");
    auto it = euler.find({region, gen});
    if (it != euler.end()) return it->second;
    if (euler_default) return *euler_default;
    throw MissingBundleDataError("missing euler value for region " + std::to_string(region) +
                                 ", generator " + std::to_string(gen));
}

bool BundleDescriptor::section_flag(int singular_index, Side side) const {
    auto it = section_trivial.find({singular_index, side == Side::Inner ? 0 : 1});
    if (it != section_trivial.end()) return it->second;
    if (section_default) return *section_default;
    throw MissingBundleDataError("missing section_trivial flag for singular " +
                                 std::to_string(singular_index) + "." +
                                 (side == Side::Inner ? "inner" : "outer"));
}

bool BundleDescriptor::torus_flag(int singular_index, Side side) const {
    auto it = torus_trivial.find({singular_index, side == Side::Inner ? 0 : 1});
    if (it != torus_trivial.end()) return it->second;
    if (torus_default) return *torus_default;
    throw MissingBundleDataError("missing torus_trivial flag for singular " +
                                 std::to_string(singular_index) + "." +
                                 (side == Side::Inner ? "inner" : "outer"));
}

std::string ApplicabilityReport::str() const {
    std::ostringstream out;
    if (applicable) {
        out << "applicable via " << rule;
        if (!starting_set_used.empty()) {
            out << " with starting set {";
            for (size_t i = 0; i < starting_set_used.size(); ++i) {
                if (i) out << ",";
                out << starting_set_used[i];
            }
            out << "}";
        }
    } else {
        out << "not applicable";
        if (!rule.empty() && rule != "none") out << " via " << rule;
        for (const FailedCondition& f : failed_conditions) {
            out << "\n  failed: " << f.condition;
            if (!f.location.empty()) out << " [" << f.location << "]";
        }
    }
    return out.str();
}

namespace {

bool h2_zero(const ManifoldHomology& fiber) {
    // H^2(X;Z) = Z^{rank H_2} + torsion(H_1) by universal coefficients.
    return fiber.group(2, Ring::Integers).rank == 0 && fiber.group(1, Ring::Integers).torsion.empty();
}

bool h1_integral_zero(const ManifoldHomology& fiber) {
    // H^1(X;Z) = Hom(H_1, Z); torsion does not register.
    return fiber.group(1, Ring::Integers).rank == 0;
}

bool h1_mod2_zero(const ManifoldHomology& fiber) { return fiber.group(1, Ring::ModTwo).is_zero(); }

std::string set_text(const std::vector<int>& s) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << ",";
        out << s[i];
    }
    out << "}";
    return out.str();
}

struct Checker {
    const FoldMapDescriptor& d;
    const BundleDescriptor& b;
    std::vector<int> s;
    ApplicabilityReport report;

    Checker(const FoldMapDescriptor& d_, const BundleDescriptor& b_, std::vector<int> s_)
        : d(d_), b(b_), s(std::move(s_)) {
        report.starting_set_used = s;
    }

    void fail(const std::string& condition, const std::string& location = "") {
        report.failed_conditions.push_back({condition, location});
    }

    ApplicabilityReport finish(const std::string& rule) {
        report.rule = rule;
        report.applicable = report.failed_conditions.empty();
        return report;
    }

    void require_h2_vanishing() {
        for (const SingularComponent& c : d.singular)
            if (!h2_zero(c.normal_fiber))
                fail("H^2(F_C;Z) = 0", "singular " + std::to_string(c.index));
    }

    void require_h1_torsion_free() {
        for (const SingularComponent& c : d.singular)
            if (!c.normal_fiber.group(1, Ring::Integers).torsion.empty())
                fail("H_1(F_C;Z) torsion-free", "singular " + std::to_string(c.index));
    }

    void require_starting_set(const RegionGraph& g) {
        if (!is_starting_set(g, s)) fail("S is a starting set of the " + g.kind + "-graph", set_text(s));
    }

    void require_start_equivalent(const RegionGraph& g1, const RegionGraph& g2) {
        if (!start_equivalent(g1, g2, s))
            fail(g1.kind + "-graph and " + g2.kind + "-graph start-equivalent on S", set_text(s));
    }

    void require_w1_vanishing_on_fibers() {
        for (int v : s) {
            const ManifoldHomology& fiber = d.regions[static_cast<size_t>(v)].fiber;
            if (fiber.is_empty()) continue;
            int gens = fiber.group(1, Ring::ModTwo).generators();
            for (int g = 0; g < gens; ++g)
                if (b.w1_on(v, g) != 0)
                    fail("w_1 vanishes on i_s*(H_1(F_s;Z/2))",
                         "region " + std::to_string(v) + ", generator " + std::to_string(g));
        }
    }

    void require_euler_vanishing_on_fibers() {
        for (int v : s) {
            const ManifoldHomology& fiber = d.regions[static_cast<size_t>(v)].fiber;
            if (fiber.is_empty()) continue;
            int gens = fiber.group(2, Ring::Integers).rank;
            for (int g = 0; g < gens; ++g)
                if (b.euler_on(v, g) != 0)
                    fail("euler class vanishes on i_s*(H_2(F_s;Z))",
                         "region " + std::to_string(v) + ", generator " + std::to_string(g));
        }
    }

    // A boundary sphere of some N(C) lying in region v carries the flag.
    bool region_flag(int v, bool section) const {
        if (d.regions[static_cast<size_t>(v)].fiber.is_empty()) return true;
        bool any = false;
        if (v >= 1) any = any || (section ? b.section_flag(v, Side::Outer) : b.torus_flag(v, Side::Outer));
        if (v + 1 <= d.l)
            any = any || (section ? b.section_flag(v + 1, Side::Inner) : b.torus_flag(v + 1, Side::Inner));
        return any;
    }

    void require_section_flags_on_s() {
        for (int v : s)
            if (!region_flag(v, true))
                fail("section over a boundary sphere in region s is trivial", "region " + std::to_string(v));
    }

    void require_torus_flags_on_s() {
        for (int v : s)
            if (!region_flag(v, false))
                fail("bundle restricted to a boundary torus in region s is trivial",
                     "region " + std::to_string(v));
    }

    // Some boundary sphere inside the image carries the section flag.
    void require_one_section_flag_in_image() {
        for (const SingularComponent& c : d.singular) {
            if (!c.inner_boundary_fiber.is_empty() && b.section_flag(c.index, Side::Inner)) return;
            if (!c.outer_boundary_fiber.is_empty() && b.section_flag(c.index, Side::Outer)) return;
        }
        fail("some section over a boundary sphere in the image is trivial", "whole image");
    }

    void require_connected() {
        if (!is_connected_source(d)) fail("source manifold connected", "whole source");
    }
};

void check_preconditions(const FoldMapDescriptor& d, const std::vector<int>& s, const char* what) {
    require_valid(d, what);
    if (!d.flags.l_trivial) throw DomainError(std::string(what) + ": descriptor must be L-trivial");
    if (d.n < 2) throw DomainError(std::string(what) + ": target dimension must be at least 2");
    if (s.empty()) throw DomainError(std::string(what) + ": starting set must be non-empty");
    for (int v : s)
        if (v < 0 || v > d.l)
            throw DomainError(std::string(what) + ": starting-set vertex out of range: " + std::to_string(v));
}

}  // namespace

bool check_h2_vanishing(const FoldMapDescriptor& d) {
    require_valid(d, "check_h2_vanishing");
    return std::all_of(d.singular.begin(), d.singular.end(),
                       [](const SingularComponent& c) { return h2_zero(c.normal_fiber); });
}

bool check_h1_torsion_free(const FoldMapDescriptor& d) {
    require_valid(d, "check_h1_torsion_free");
    return std::all_of(d.singular.begin(), d.singular.end(), [](const SingularComponent& c) {
        return c.normal_fiber.group(1, Ring::Integers).torsion.empty();
    });
}

ApplicabilityReport check_theorem_1(const FoldMapDescriptor& d, const BundleDescriptor& b,
                                    const std::vector<int>& s) {
    check_preconditions(d, s, "check_theorem_1");
    Checker check(d, b, s);
    RegionGraph h1z2 = build_graph(d, 1, Ring::ModTwo);
    check.require_h2_vanishing();
    check.require_starting_set(h1z2);
    check.require_w1_vanishing_on_fibers();
    if (d.n == 3) {
        check.require_start_equivalent(h1z2, h0_all_rings_graph(d));
        check.require_section_flags_on_s();
        return check.finish("thm1 n=3");
    }
    if (d.n == 2) {
        check.require_start_equivalent(h1z2, h0_all_rings_graph(d));
        check.require_start_equivalent(h1z2, build_graph(d, 1, Ring::Integers));
        check.require_torus_flags_on_s();
        return check.finish("thm1 n=2");
    }
    return check.finish("thm1 n>=4");
}

ApplicabilityReport check_theorem_2(const FoldMapDescriptor& d, const BundleDescriptor& b,
                                    const std::vector<int>& s) {
    check_preconditions(d, s, "check_theorem_2");
    if (d.n != 2 && d.n != 3) throw DomainError("check_theorem_2 covers n = 2 and n = 3 only");
    Checker check(d, b, s);
    RegionGraph h1z2 = build_graph(d, 1, Ring::ModTwo);
    check.require_connected();
    check.require_h2_vanishing();
    check.require_starting_set(h1z2);
    if (d.n == 3) {
        check.require_w1_vanishing_on_fibers();
        // Corollary 1: a disc image needs no section condition.
        if (d.image_kind != ImageKind::Disc) check.require_one_section_flag_in_image();
        return check.finish(d.image_kind == ImageKind::Disc ? "thm2 n=3 (cor1)" : "thm2 n=3");
    }
    check.require_start_equivalent(h1z2, build_graph(d, 1, Ring::Integers));
    check.require_torus_flags_on_s();
    return check.finish("thm2 n=2");
}

ApplicabilityReport check_theorem_3(const FoldMapDescriptor& d, const BundleDescriptor& b,
                                    const std::vector<int>& s) {
    check_preconditions(d, s, "check_theorem_3");
    if (!b.orientable) throw DomainError("check_theorem_3 requires an orientable bundle");
    Checker check(d, b, s);
    RegionGraph h2z = build_graph(d, 2, Ring::Integers);
    check.require_h1_torsion_free();
    check.require_starting_set(h2z);
    check.require_euler_vanishing_on_fibers();
    if (d.n == 3) {
        check.require_start_equivalent(h2z, h0_all_rings_graph(d));
        check.require_section_flags_on_s();
        return check.finish("thm3 n=3");
    }
    if (d.n == 2) {
        check.require_start_equivalent(h2z, build_graph(d, 1, Ring::Integers));
        check.require_torus_flags_on_s();
        return check.finish("thm3 n=2");
    }
    return check.finish("thm3 n>=4");
}

ApplicabilityReport check_theorem_4(const FoldMapDescriptor& d, const BundleDescriptor& b,
                                    const std::vector<int>& s) {
    check_preconditions(d, s, "check_theorem_4");
    if (d.n != 3) throw DomainError("check_theorem_4 covers n = 3 only");
    if (!b.orientable) throw DomainError("check_theorem_4 requires an orientable bundle");
    Checker check(d, b, s);
    RegionGraph h2z = build_graph(d, 2, Ring::Integers);
    check.require_connected();
    check.require_h1_torsion_free();
    check.require_starting_set(h2z);
    check.require_euler_vanishing_on_fibers();
    // Corollary 2: a disc image needs no section condition.
    if (d.image_kind != ImageKind::Disc) check.require_one_section_flag_in_image();
    return check.finish(d.image_kind == ImageKind::Disc ? "thm4 (cor2)" : "thm4");
}

ApplicabilityReport check_propositions_34(const FoldMapDescriptor& d, const BundleDescriptor& b) {
    require_valid(d, "check_propositions_34");
    if (!d.flags.l_trivial) throw DomainError("check_propositions_34: descriptor must be L-trivial");
    Checker check(d, b, {});
    if (d.n >= 3) {
        if (d.n == 3) {
            if (d.image_kind != ImageKind::Disc) check.fail("n=3 requires f(M) = D^3", "map.image");
            if (!is_connected_source(d)) check.fail("n=3 requires a connected source", "whole source");
        }
        for (const SingularComponent& c : d.singular) {
            if (!h2_zero(c.normal_fiber)) check.fail("H^2(F_C;Z) = 0", "singular " + std::to_string(c.index));
            if (!b.orientable && !h1_mod2_zero(c.normal_fiber))
                check.fail("H^1(F_C;Z/2) = 0 for a non-orientable bundle",
                           "singular " + std::to_string(c.index));
        }
        return check.finish("prop3");
    }
    for (const SingularComponent& c : d.singular) {
        if (!h1_integral_zero(c.normal_fiber))
            check.fail("H^1(F_C;Z) = 0", "singular " + std::to_string(c.index));
        if (!h2_zero(c.normal_fiber)) check.fail("H^2(F_C;Z) = 0", "singular " + std::to_string(c.index));
    }
    for (const SingularComponent& c : d.singular)
        for (Side side : {Side::Inner, Side::Outer}) {
            const ManifoldHomology& boundary =
                side == Side::Inner ? c.inner_boundary_fiber : c.outer_boundary_fiber;
            if (boundary.is_empty()) continue;
            if (!b.torus_flag(c.index, side))
                check.fail("bundle restricted to the boundary tori of N(C) is trivial",
                           "singular " + std::to_string(c.index) + "." +
                               (side == Side::Inner ? "inner" : "outer"));
        }
    return check.finish("prop4");
}

ApplicabilityReport check_auto(const FoldMapDescriptor& d, const BundleDescriptor& b,
                               const std::vector<int>& s) {
    std::vector<ApplicabilityReport> tried;
    tried.push_back(check_propositions_34(d, b));
    if (tried.back().applicable) return tried.back();
    if (d.n == 2 || d.n == 3) {
        tried.push_back(check_theorem_2(d, b, s));
        if (tried.back().applicable) return tried.back();
    }
    if (d.n == 3 && b.orientable) {
        tried.push_back(check_theorem_4(d, b, s));
        if (tried.back().applicable) return tried.back();
    }
    tried.push_back(check_theorem_1(d, b, s));
    if (tried.back().applicable) return tried.back();
    if (b.orientable) {
        tried.push_back(check_theorem_3(d, b, s));
        if (tried.back().applicable) return tried.back();
    }
    ApplicabilityReport out;
    out.applicable = false;
    out.rule = "none";
    out.starting_set_used = s;
    for (const ApplicabilityReport& r : tried)
        for (const FailedCondition& f : r.failed_conditions)
            out.failed_conditions.push_back({r.rule + ": " + f.condition, f.location});
    return out;
}

}  // namespace roundfold
