#pragma once

#include <string>
#include <vector>

#include "roundfold/abelian.hpp"

namespace roundfold {

struct UnsupportedTorError : std::runtime_error {
    explicit UnsupportedTorError(const std::string& what) : std::runtime_error(what) {}
};

/// Integral homology of one of the building-block manifolds (or a disjoint
/// union of them). Groups are stored over Z for degrees 0..dim; mod-2 groups
/// are derived through universal coefficients, which is exact for finitely
/// generated homology. The empty manifold is the distinguished value with
/// components = 0, dim = -1 and every group zero.
struct ManifoldHomology {
    int dim = -1;
    int components = 0;
    std::vector<AbGroup> integral;  // integral[k] = H_k(X; Z), k = 0..dim
    std::string label = "empty";

    static ManifoldHomology empty() { return ManifoldHomology{}; }
    bool is_empty() const { return components == 0; }

    AbGroup group(int degree, Ring ring) const;
    int64_t euler_characteristic() const;

    // Structural equality; the label is presentation only.
    bool same_homology(const ManifoldHomology& other) const;
};

ManifoldHomology sphere(int k);
ManifoldHomology disc(int k);
// S^k with the interiors of `holes` disjoint closed k-discs removed.
ManifoldHomology sphere_minus_discs(int k, int holes);
// Closed orientable surface of genus g.
ManifoldHomology torus_surface(int genus);
ManifoldHomology disjoint_union(const ManifoldHomology& a, const ManifoldHomology& b);
// Raw groups; components is read off H_0.
ManifoldHomology explicit_homology(int dim, std::vector<AbGroup> integral, const std::string& label);

// H_n(X x F) = sum over p+q=n of H_p(X) (x) H_q(F). Over Z this requires all
// Tor terms to vanish; a nonzero Tor term raises UnsupportedTorError rather
// than returning a silently wrong group.
ManifoldHomology kunneth_with(const ManifoldHomology& x, const ManifoldHomology& f);

}  // namespace roundfold
