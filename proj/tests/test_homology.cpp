#include "doctest.h"
#include "roundfold/homology.hpp"
#include "roundfold/textio.hpp"

using namespace roundfold;

namespace {

AbGroup z(int rank) { return AbGroup::free(rank); }

}  // namespace

TEST_CASE("spheres") {
    ManifoldHomology s2 = sphere(2);
    CHECK(s2.group(0, Ring::Integers) == z(1));
    CHECK(s2.group(1, Ring::Integers).is_zero());
    CHECK(s2.group(2, Ring::Integers) == z(1));
    CHECK(s2.group(3, Ring::Integers).is_zero());

    CHECK(sphere(0).group(0, Ring::Integers) == z(2));
    CHECK(sphere(0).components == 2);

    ManifoldHomology s3 = sphere(3);
    CHECK(s3.group(0, Ring::ModTwo) == AbGroup::mod_two_vector_space(1));
    CHECK(s3.group(1, Ring::ModTwo).is_zero());
    CHECK(s3.group(2, Ring::ModTwo).is_zero());
    CHECK(s3.group(3, Ring::ModTwo) == AbGroup::mod_two_vector_space(1));

    CHECK_THROWS_AS(sphere(-1), DomainError);
}

TEST_CASE("discs are contractible") {
    for (int k : {0, 3, 5}) {
        ManifoldHomology d = disc(k);
        CHECK(d.group(0, Ring::Integers) == z(1));
        for (int i = 1; i <= k; ++i) CHECK(d.group(i, Ring::Integers).is_zero());
        CHECK(d.group(0, Ring::ModTwo) == AbGroup::mod_two_vector_space(1));
    }
    CHECK_THROWS_AS(disc(-2), DomainError);
}

TEST_CASE("sphere_minus_discs") {
    // Euler characteristic oracle: chi(S^k minus h open discs) =
    // 1 + (-1)^k + h*(-1)^{k-1}, and the space is a wedge of h-1 (k-1)-spheres.
    for (int k : {2, 3, 4})
        for (int h : {1, 2, 3, 4}) {
            ManifoldHomology m = sphere_minus_discs(k, h);
            int64_t expected_chi = 1 + (k % 2 == 0 ? 1 : -1) + h * (k % 2 == 0 ? -1 : 1);
            CHECK(m.euler_characteristic() == expected_chi);
            CHECK(m.components == 1);
        }

    ManifoldHomology pants4 = sphere_minus_discs(4, 3);
    CHECK(pants4.group(0, Ring::Integers) == z(1));
    CHECK(pants4.group(3, Ring::Integers) == z(2));
    CHECK(pants4.group(1, Ring::Integers).is_zero());

    CHECK(sphere_minus_discs(2, 1).same_homology(disc(2)));

    ManifoldHomology annulus3 = sphere_minus_discs(3, 2);
    CHECK(annulus3.group(0, Ring::Integers) == z(1));
    CHECK(annulus3.group(2, Ring::Integers) == z(1));

    // Circle minus h arcs: h contractible components.
    ManifoldHomology arcs = sphere_minus_discs(1, 3);
    CHECK(arcs.components == 3);
    CHECK(arcs.group(0, Ring::Integers) == z(3));

    CHECK_THROWS_AS(sphere_minus_discs(2, 0), DomainError);
}

TEST_CASE("kunneth on pinned products") {
    ManifoldHomology torus = kunneth_with(sphere(1), sphere(1));
    CHECK(torus.group(0, Ring::Integers) == z(1));
    CHECK(torus.group(1, Ring::Integers) == z(2));
    CHECK(torus.group(2, Ring::Integers) == z(1));
    CHECK(torus.same_homology(torus_surface(1)));

    // H_n(S^1 x X) = H_n(X) + H_{n-1}(X), checked against a direct listing for
    // X = sphere_minus_discs(3,3): H_* = (Z, 0, Z^2, 0).
    ManifoldHomology x = sphere_minus_discs(3, 3);
    ManifoldHomology p = kunneth_with(sphere(1), x);
    CHECK(p.group(0, Ring::Integers) == z(1));
    CHECK(p.group(1, Ring::Integers) == z(1));
    CHECK(p.group(2, Ring::Integers) == z(2));
    CHECK(p.group(3, Ring::Integers) == z(2));
    CHECK(p.group(4, Ring::Integers).is_zero());

    // Contractible factor changes nothing.
    ManifoldHomology f = sphere_minus_discs(4, 3);
    ManifoldHomology df = kunneth_with(disc(3), f);
    for (int k = 0; k <= f.dim; ++k)
        CHECK(df.group(k, Ring::Integers) == f.group(k, Ring::Integers));
}

TEST_CASE("kunneth properties over the catalog") {
    std::vector<ManifoldHomology> catalog = {sphere(1), sphere(2), disc(2), sphere_minus_discs(3, 3),
                                             torus_surface(2), disjoint_union(sphere(2), sphere(2))};
    for (const auto& a : catalog)
        for (const auto& b : catalog) {
            ManifoldHomology ab = kunneth_with(a, b);
            ManifoldHomology ba = kunneth_with(b, a);
            CHECK(ab.same_homology(ba));
            CHECK(ab.euler_characteristic() == a.euler_characteristic() * b.euler_characteristic());
            CHECK(ab.components == a.components * b.components);
        }
}

TEST_CASE("kunneth rejects interacting torsion") {
    ManifoldHomology lens = explicit_homology(
        3, {z(1), AbGroup::cyclic(2), AbGroup::zero(), z(1)}, "explicit(dim=3;h0=Z;h1=Z/2;h2=0;h3=Z)");
    CHECK_THROWS_AS(kunneth_with(lens, lens), UnsupportedTorError);
    // One torsion-free side is fine.
    CHECK_NOTHROW(kunneth_with(lens, sphere(1)));
    ManifoldHomology p = kunneth_with(lens, sphere(1));
    CHECK(p.group(1, Ring::Integers) == canonicalize(1, {2}));
    CHECK(p.group(2, Ring::Integers) == AbGroup::cyclic(2));
}

TEST_CASE("mod-2 groups come from universal coefficients") {
    ManifoldHomology lens = explicit_homology(
        3, {z(1), AbGroup::cyclic(2), AbGroup::zero(), z(1)}, "explicit(dim=3;h0=Z;h1=Z/2;h2=0;h3=Z)");
    CHECK(lens.group(1, Ring::ModTwo) == AbGroup::mod_two_vector_space(1));
    // Tor(H_1, Z/2) shows up in degree 2.
    CHECK(lens.group(2, Ring::ModTwo) == AbGroup::mod_two_vector_space(1));
    CHECK(lens.group(3, Ring::ModTwo) == AbGroup::mod_two_vector_space(1));

    // Odd torsion is invisible mod 2.
    ManifoldHomology odd = explicit_homology(
        2, {z(1), AbGroup::cyclic(3), AbGroup::zero()}, "explicit(dim=2;h0=Z;h1=Z/3;h2=0)");
    CHECK(odd.group(1, Ring::ModTwo).is_zero());
    CHECK(odd.group(2, Ring::ModTwo).is_zero());
}

TEST_CASE("mod-2 rank dominates integral rank on catalog manifolds") {
    std::vector<ManifoldHomology> catalog = {sphere(1),  sphere(2), disc(4), sphere_minus_discs(2, 3),
                                             sphere_minus_discs(5, 3), torus_surface(3)};
    for (const auto& m : catalog)
        for (int k = 0; k <= m.dim; ++k) {
            CHECK(m.group(k, Ring::ModTwo).generators() >= m.group(k, Ring::Integers).rank);
            CHECK(m.group(k, Ring::ModTwo).generators() == m.group(k, Ring::Integers).rank);
        }
}

TEST_CASE("disjoint unions") {
    ManifoldHomology two_spheres = disjoint_union(sphere(2), sphere(2));
    CHECK(two_spheres.components == 2);
    CHECK(two_spheres.group(0, Ring::Integers) == z(2));
    CHECK(two_spheres.group(2, Ring::Integers) == z(2));
    CHECK(disjoint_union(ManifoldHomology::empty(), sphere(2)).same_homology(sphere(2)));
    CHECK_THROWS_AS(disjoint_union(sphere(1), sphere(2)), DomainError);
}

TEST_CASE("empty manifold convention") {
    ManifoldHomology e = ManifoldHomology::empty();
    CHECK(e.is_empty());
    CHECK(e.components == 0);
    CHECK(e.group(0, Ring::Integers).is_zero());
    CHECK(e.group(1, Ring::ModTwo).is_zero());
    CHECK(kunneth_with(e, sphere(2)).is_empty());
}

TEST_CASE("fiber expression grammar round-trips") {
    for (const std::string text :
         {"sphere(2)", "disc(0)", "sphere_minus_discs(5,3)", "torus(2)", "empty",
          "disjoint_union(sphere(4),sphere(4))", "product(sphere(1),sphere_minus_discs(3,3))",
          "explicit(dim=2;h0=Z;h1=Z^2+Z/2;h2=0)"}) {
        ManifoldHomology m = parse_homology_expression(text);
        CHECK(homology_expression(m) == text);
        CHECK(parse_homology_expression(homology_expression(m)).same_homology(m));
    }
    CHECK_THROWS_AS(parse_homology_expression("sphere(2,3)"), ParseError);
    CHECK_THROWS_AS(parse_homology_expression("klein_bottle(1)"), ParseError);
    CHECK_THROWS_AS(parse_homology_expression("explicit(dim=1;h0=Z/2;h1=0)"), ParseError);
    CHECK_THROWS_AS(parse_homology_expression("sphere(2) extra"), ParseError);
}
