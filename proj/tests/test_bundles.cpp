#include "doctest.h"
#include "roundfold/bundles.hpp"
#include "roundfold/textio.hpp"

using namespace roundfold;

namespace {

// The grid of bundle descriptors used across the applicability tests.
BundleDescriptor w1_violating() {
    BundleDescriptor b;
    b.orientable = false;
    b.w1_default = 1;
    b.section_default = true;
    b.torus_default = true;
    return b;
}

BundleDescriptor euler_violating() {
    BundleDescriptor b = BundleDescriptor::trivial();
    b.euler_default = 7;
    return b;
}

BundleDescriptor flag_violating() {
    BundleDescriptor b = BundleDescriptor::trivial();
    b.section_default = false;
    b.torus_default = false;
    return b;
}

}  // namespace

TEST_CASE("fiber cohomology conditions") {
    CHECK(check_h2_vanishing(special_generic_sphere(5, 3)));
    CHECK(check_h2_vanishing(connected_sum_sphere_bundles(9, 4, 3)));  // m-n > 2
    CHECK(check_h2_vanishing(connected_sum_sphere_bundles(5, 4, 3)));  // m-n = 1
    CHECK_FALSE(check_h2_vanishing(connected_sum_sphere_bundles(4, 2, 2)));  // m-n = 2

    // An explicit fiber with H_2 = Z fails.
    FoldMapDescriptor d = special_generic_sphere(5, 3);
    d.singular[0].normal_fiber = explicit_homology(
        3, {AbGroup::free(1), AbGroup::zero(), AbGroup::free(1), AbGroup::zero()},
        "explicit(dim=3;h0=Z;h1=0;h2=Z;h3=0)");
    for (Side side : {Side::Inner, Side::Outer})
        for (int k : {0, 1, 2})
            for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
                const ManifoldHomology& boundary =
                    side == Side::Inner ? d.singular[0].inner_boundary_fiber
                                        : d.singular[0].outer_boundary_fiber;
                auto forced = auto_inclusion(boundary.group(k, ring),
                                             d.singular[0].normal_fiber.group(k, ring), k, ring);
                d.singular[0].incl(side, k, ring) =
                    forced ? *forced
                           : HomMatrix::zero(boundary.group(k, ring),
                                             d.singular[0].normal_fiber.group(k, ring), ring);
            }
    REQUIRE(validate(d).empty());
    CHECK_FALSE(check_h2_vanishing(d));

    CHECK(check_h1_torsion_free(spun_disc_family(5, 2)));
    FoldMapDescriptor torsion = d;
    torsion.singular[0].normal_fiber = explicit_homology(
        3, {AbGroup::free(1), AbGroup::cyclic(2), AbGroup::zero(), AbGroup::zero()},
        "explicit(dim=3;h0=Z;h1=Z/2;h2=0;h3=0)");
    for (Side side : {Side::Inner, Side::Outer})
        for (int k : {0, 1, 2})
            for (Ring ring : {Ring::Integers, Ring::ModTwo}) {
                const ManifoldHomology& boundary =
                    side == Side::Inner ? torsion.singular[0].inner_boundary_fiber
                                        : torsion.singular[0].outer_boundary_fiber;
                auto forced = auto_inclusion(boundary.group(k, ring),
                                             torsion.singular[0].normal_fiber.group(k, ring), k, ring);
                torsion.singular[0].incl(side, k, ring) =
                    forced ? *forced
                           : HomMatrix::zero(boundary.group(k, ring),
                                             torsion.singular[0].normal_fiber.group(k, ring), ring);
            }
    REQUIRE(validate(torsion).empty());
    CHECK_FALSE(check_h1_torsion_free(torsion));
    CHECK_FALSE(check_h2_vanishing(torsion));  // torsion in H_1 lands in H^2
}

TEST_CASE("theorem 1, n >= 4") {
    FoldMapDescriptor d = connected_sum_sphere_bundles(9, 4, 2);  // m-n = 5
    auto report = check_theorem_1(d, BundleDescriptor::trivial(), {0});
    CHECK(report.applicable);
    CHECK(report.rule == "thm1 n>=4");

    // H^2 obstruction is named.
    FoldMapDescriptor bad = connected_sum_sphere_bundles(4, 2, 2);
    auto rejected = check_theorem_1(bad, BundleDescriptor::trivial(), {0});
    CHECK_FALSE(rejected.applicable);
    REQUIRE(!rejected.failed_conditions.empty());
    CHECK(rejected.failed_conditions[0].condition == "H^2(F_C;Z) = 0");
    CHECK(rejected.failed_conditions[0].location == "singular 1");
}

TEST_CASE("theorem 1, n = 3 uses the middle region of the annulus family") {
    FoldMapDescriptor d = two_component_special_generic(6, 3);
    auto report = check_theorem_1(d, BundleDescriptor::trivial(), {1});
    CHECK(report.applicable);
    CHECK(report.rule == "thm1 n=3");
    // From the empty proper-core region, the all-rings H_0 graph cannot reach
    // the middle region.
    auto from_core = check_theorem_1(d, BundleDescriptor::trivial(), {0});
    CHECK_FALSE(from_core.applicable);
}

TEST_CASE("theorem 1, m-n = 1 applies where the propositions do not") {
    FoldMapDescriptor d = connected_sum_sphere_bundles(6, 5, 2);  // m-n = 1, n >= 4
    // Non-orientable bundle whose w_1 vanishes on the proper-core fiber
    // classes only.
    BundleDescriptor b;
    b.orientable = false;
    b.w1_default = 1;
    for (int gen = 0; gen < d.regions[0].fiber.group(1, Ring::ModTwo).generators(); ++gen)
        b.w1[{0, gen}] = 0;
    b.section_default = true;
    b.torus_default = true;

    auto props = check_propositions_34(d, b);
    CHECK_FALSE(props.applicable);
    auto thm1 = check_theorem_1(d, b, {0});
    CHECK(thm1.applicable);

    // With w_1 nonzero on the starting fiber classes the theorem fails too.
    BundleDescriptor all_ones = w1_violating();
    auto rejected = check_theorem_1(d, all_ones, {0});
    CHECK_FALSE(rejected.applicable);
    CHECK(rejected.failed_conditions[0].condition == "w_1 vanishes on i_s*(H_1(F_s;Z/2))");
}

TEST_CASE("theorem 2: corollary-1 fast path and annulus failure") {
    // Corollary 1 instance: disc image, n = 3.
    FoldMapDescriptor d = spun_disc_family(6, 3);
    auto report = check_theorem_2(d, flag_violating(), {0});
    CHECK(report.applicable);
    CHECK(report.rule == "thm2 n=3 (cor1)");

    // Annulus image with no section flag fails.
    FoldMapDescriptor annulus = two_component_special_generic(6, 3);
    auto rejected = check_theorem_2(annulus, flag_violating(), {1});
    CHECK_FALSE(rejected.applicable);
    bool named = false;
    for (const auto& f : rejected.failed_conditions)
        named = named || f.condition.find("section") != std::string::npos;
    CHECK(named);

    // Trivial bundle applies whenever the map-side hypotheses hold.
    CHECK(check_theorem_2(annulus, BundleDescriptor::trivial(), {1}).applicable);
    CHECK(check_theorem_2(annulus, BundleDescriptor::trivial(), {1}).rule == "thm2 n=3");

    CHECK_THROWS_AS(check_theorem_2(connected_sum_sphere_bundles(9, 4, 2),
                                    BundleDescriptor::trivial(), {0}),
                    DomainError);
}

TEST_CASE("theorem 3: example-3 family") {
    FoldMapDescriptor d = connected_sum_sphere_bundles(4, 2, 2);
    auto report = check_theorem_3(d, BundleDescriptor::trivial(), {0});
    CHECK(report.applicable);
    CHECK(report.rule == "thm3 n=2");

    // Euler data violating the fiber condition is rejected with the location.
    auto rejected = check_theorem_3(d, euler_violating(), {0});
    CHECK_FALSE(rejected.applicable);
    REQUIRE(!rejected.failed_conditions.empty());
    CHECK(rejected.failed_conditions[0].condition == "euler class vanishes on i_s*(H_2(F_s;Z))");
    CHECK(rejected.failed_conditions[0].location == "region 0, generator 0");

    CHECK_THROWS_AS(check_theorem_3(d, w1_violating(), {0}), DomainError);

    // (9,4,2) family: theorem 3 in the n >= 4 clause.
    auto high = check_theorem_3(connected_sum_sphere_bundles(9, 4, 2), BundleDescriptor::trivial(), {0});
    CHECK(high.applicable);
    CHECK(high.rule == "thm3 n>=4");
}

TEST_CASE("theorem 4: corollary-2 fast path, torsion failure, annulus failure") {
    FoldMapDescriptor d = spun_disc_family(6, 3);
    auto report = check_theorem_4(d, flag_violating(), {0});
    CHECK(report.applicable);
    CHECK(report.rule == "thm4 (cor2)");

    FoldMapDescriptor annulus = two_component_special_generic(6, 3);
    auto rejected = check_theorem_4(annulus, flag_violating(), {1});
    CHECK_FALSE(rejected.applicable);

    CHECK_THROWS_AS(check_theorem_4(connected_sum_sphere_bundles(9, 4, 2),
                                    BundleDescriptor::trivial(), {0}),
                    DomainError);
}

TEST_CASE("propositions 3 and 4") {
    // Ex 1.3 with m-n > 2: proposition 3 applies.
    auto p = check_propositions_34(connected_sum_sphere_bundles(9, 4, 2), BundleDescriptor::trivial());
    CHECK(p.applicable);
    CHECK(p.rule == "prop3");

    // m-n = 2: neither proposition applies (H^2 obstruction).
    auto p2 = check_propositions_34(connected_sum_sphere_bundles(4, 2, 2), BundleDescriptor::trivial());
    CHECK_FALSE(p2.applicable);
    CHECK(p2.rule == "prop4");

    // n = 2 with m-n > 2: proposition 4 applies with the trivial bundle.
    auto p4 = check_propositions_34(connected_sum_sphere_bundles(8, 2, 3), BundleDescriptor::trivial());
    CHECK(p4.applicable);
    CHECK(p4.rule == "prop4");

    // Non-orientable bundles need the mod-2 H^1 strengthening.
    auto strengthened =
        check_propositions_34(connected_sum_sphere_bundles(6, 5, 2), w1_violating());
    CHECK_FALSE(strengthened.applicable);
    auto high_codim = check_propositions_34(connected_sum_sphere_bundles(9, 4, 2), w1_violating());
    CHECK(high_codim.applicable);
}

TEST_CASE("proposition applicability implies theorem applicability on the grid") {
    std::vector<FoldMapDescriptor> catalog_fixtures = {
        special_generic_sphere(5, 3),          special_generic_sphere(6, 4),
        bundle_over_sphere(sphere(3), 3),      connected_sum_sphere_bundles(9, 4, 2),
        connected_sum_sphere_bundles(5, 4, 3), connected_sum_sphere_bundles(4, 2, 2),
        connected_sum_sphere_bundles(8, 2, 3), two_component_special_generic(6, 3),
        spun_torus_family(7, 2),               spun_disc_family(7, 2),
        spun_disc_family(6, 3),                case3_connected_sum(8, 2)};
    std::vector<BundleDescriptor> grid = {BundleDescriptor::trivial(), w1_violating(),
                                          euler_violating(), flag_violating()};
    for (const auto& d : catalog_fixtures)
        for (const auto& b : grid) {
            auto props = check_propositions_34(d, b);
            if (!props.applicable) continue;
            bool some_theorem = false;
            if (d.n == 3 || d.n == 2) some_theorem = check_theorem_2(d, b, {0}).applicable;
            if (!some_theorem && d.n == 3 && b.orientable)
                some_theorem = check_theorem_4(d, b, {0}).applicable;
            if (!some_theorem) some_theorem = check_theorem_1(d, b, {0}).applicable;
            if (!some_theorem && b.orientable) some_theorem = check_theorem_3(d, b, {0}).applicable;
            CAPTURE(d.m);
            CAPTURE(d.n);
            CAPTURE(d.l);
            CAPTURE(b.orientable);
            CHECK(some_theorem);
        }
}

TEST_CASE("monotonicity: enlarging the starting set never kills applicability") {
    std::vector<FoldMapDescriptor> fixtures = {connected_sum_sphere_bundles(9, 4, 2),
                                               connected_sum_sphere_bundles(4, 2, 2),
                                               spun_disc_family(6, 3)};
    std::vector<BundleDescriptor> grid = {BundleDescriptor::trivial(), w1_violating(),
                                          euler_violating(), flag_violating()};
    for (const auto& d : fixtures)
        for (const auto& b : grid) {
            const uint32_t limit = 1u << (d.l + 1);
            for (uint32_t mask = 1; mask < limit; ++mask) {
                std::vector<int> s;
                for (int v = 0; v <= d.l; ++v)
                    if (mask & (1u << v)) s.push_back(v);
                for (uint32_t bigger = mask; bigger < limit; ++bigger) {
                    if ((bigger & mask) != mask || bigger == mask) continue;
                    std::vector<int> s2;
                    for (int v = 0; v <= d.l; ++v)
                        if (bigger & (1u << v)) s2.push_back(v);
                    if (check_theorem_1(d, b, s).applicable) CHECK(check_theorem_1(d, b, s2).applicable);
                    if (b.orientable && check_theorem_3(d, b, s).applicable)
                        CHECK(check_theorem_3(d, b, s2).applicable);
                }
            }
        }
}

TEST_CASE("auto dispatch order prefers the weakest clause") {
    auto via_props = check_auto(connected_sum_sphere_bundles(9, 4, 2), BundleDescriptor::trivial(), {0});
    CHECK(via_props.applicable);
    CHECK(via_props.rule == "prop3");

    auto via_thm3 = check_auto(connected_sum_sphere_bundles(4, 2, 2), BundleDescriptor::trivial(), {0});
    CHECK(via_thm3.applicable);
    CHECK(via_thm3.rule == "thm3 n=2");

    auto nothing = check_auto(connected_sum_sphere_bundles(4, 2, 2), euler_violating(), {0});
    CHECK_FALSE(nothing.applicable);
    CHECK(nothing.rule == "none");
    CHECK(!nothing.failed_conditions.empty());
}

TEST_CASE("reports are deterministic") {
    FoldMapDescriptor d = connected_sum_sphere_bundles(4, 2, 2);
    auto a = check_auto(d, euler_violating(), {0});
    auto b = check_auto(d, euler_violating(), {0});
    CHECK(a.rule == b.rule);
    CHECK(a.failed_conditions == b.failed_conditions);
}

TEST_CASE("missing bundle data is an error, not a silent zero") {
    FoldMapDescriptor d = connected_sum_sphere_bundles(5, 4, 2);  // m-n = 1, fibers have H_1
    BundleDescriptor b;
    b.orientable = false;  // no wildcard, no w1 entries
    b.section_default = true;
    b.torus_default = true;
    CHECK_THROWS_AS(check_theorem_1(d, b, {0}), MissingBundleDataError);
}

TEST_CASE("bundle file round-trip and invariants") {
    BundleDescriptor b;
    b.orientable = true;
    b.w1_default = 0;
    b.euler[{0, 0}] = -2;
    b.euler_default = 0;
    b.section_trivial[{1, 0}] = true;
    b.section_default = false;
    b.torus_default = true;
    std::string text = serialize(b);
    BundleDescriptor back = parse_bundle(text);
    CHECK(serialize(back) == text);
    CHECK(back.euler_on(0, 0) == -2);
    CHECK(back.euler_on(3, 1) == 0);
    CHECK(back.section_flag(1, Side::Inner));
    CHECK_FALSE(back.section_flag(1, Side::Outer));

    CHECK_THROWS_AS(parse_bundle("[bundle]\norientable = false\neuler 0.0 = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_bundle("[bundle]\nw1 0 = 1\n"), ParseError);
}
