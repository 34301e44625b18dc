#include "roundfold/homology.hpp"

#include <algorithm>
#include <sstream>

namespace roundfold {

namespace {

int count_even(const std::vector<int64_t>& torsion) {
    return static_cast<int>(std::count_if(torsion.begin(), torsion.end(),
                                          [](int64_t d) { return d % 2 == 0; }));
}

}  // namespace

AbGroup ManifoldHomology::group(int degree, Ring ring) const {
    if (degree < 0) throw DomainError("negative homology degree");
    AbGroup hk = degree <= dim && degree < static_cast<int>(integral.size())
                     ? integral[static_cast<size_t>(degree)]
                     : AbGroup::zero();
    if (ring == Ring::Integers) return hk;
    // H_k(X; Z/2) = H_k (x) Z/2 + Tor(H_{k-1}, Z/2).
    int d = hk.rank + count_even(hk.torsion);
    if (degree > 0 && degree - 1 <= dim && degree - 1 < static_cast<int>(integral.size()))
        d += count_even(integral[static_cast<size_t>(degree - 1)].torsion);
    return AbGroup::mod_two_vector_space(d);
}

int64_t ManifoldHomology::euler_characteristic() const {
    int64_t chi = 0;
    for (int k = 0; k <= dim && k < static_cast<int>(integral.size()); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * integral[static_cast<size_t>(k)].rank;
    return chi;
}

bool ManifoldHomology::same_homology(const ManifoldHomology& other) const {
    if (is_empty() || other.is_empty()) return is_empty() == other.is_empty();
    if (dim != other.dim || components != other.components) return false;
    for (int k = 0; k <= dim; ++k)
        if (group(k, Ring::Integers) != other.group(k, Ring::Integers)) return false;
    return true;
}

ManifoldHomology sphere(int k) {
    if (k < 0) throw DomainError("sphere: negative dimension");
    ManifoldHomology m;
    m.dim = k;
    m.label = "sphere(" + std::to_string(k) + ")";
    if (k == 0) {
        m.components = 2;
        m.integral = {AbGroup::free(2)};
        return m;
    }
    m.components = 1;
    m.integral.assign(static_cast<size_t>(k) + 1, AbGroup::zero());
    m.integral[0] = AbGroup::free(1);
    m.integral[static_cast<size_t>(k)] = AbGroup::free(1);
    return m;
}

ManifoldHomology disc(int k) {
    if (k < 0) throw DomainError("disc: negative dimension");
    ManifoldHomology m;
    m.dim = k;
    m.components = 1;
    m.label = "disc(" + std::to_string(k) + ")";
    m.integral.assign(static_cast<size_t>(k) + 1, AbGroup::zero());
    m.integral[0] = AbGroup::free(1);
    return m;
}

ManifoldHomology sphere_minus_discs(int k, int holes) {
    if (k < 1) throw DomainError("sphere_minus_discs: dimension must be >= 1");
    if (holes < 1) throw DomainError("sphere_minus_discs: at least one disc must be removed");
    ManifoldHomology m;
    m.dim = k;
    m.label = "sphere_minus_discs(" + std::to_string(k) + "," + std::to_string(holes) + ")";
    m.integral.assign(static_cast<size_t>(k) + 1, AbGroup::zero());
    if (k == 1) {
        // A circle minus `holes` open arcs is `holes` disjoint closed arcs.
        m.components = holes;
        m.integral[0] = AbGroup::free(holes);
        return m;
    }
    // Homotopy equivalent to a wedge of (holes - 1) spheres of dimension k-1.
    m.components = 1;
    m.integral[0] = AbGroup::free(1);
    if (holes > 1) m.integral[static_cast<size_t>(k) - 1] = AbGroup::free(holes - 1);
    return m;
}

ManifoldHomology torus_surface(int genus) {
    if (genus < 0) throw DomainError("torus: negative genus");
    ManifoldHomology m;
    m.dim = 2;
    m.components = 1;
    m.label = "torus(" + std::to_string(genus) + ")";
    m.integral = {AbGroup::free(1), AbGroup::free(2 * genus), AbGroup::free(1)};
    return m;
}

ManifoldHomology disjoint_union(const ManifoldHomology& a, const ManifoldHomology& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (a.dim != b.dim)
        throw DomainError("disjoint_union: mixed dimensions " + std::to_string(a.dim) + " and " +
                          std::to_string(b.dim));
    ManifoldHomology m;
    m.dim = a.dim;
    m.components = a.components + b.components;
    m.label = "disjoint_union(" + a.label + "," + b.label + ")";
    m.integral.reserve(static_cast<size_t>(m.dim) + 1);
    for (int k = 0; k <= m.dim; ++k)
        m.integral.push_back(direct_sum(a.group(k, Ring::Integers), b.group(k, Ring::Integers)));
    return m;
}

ManifoldHomology explicit_homology(int dim, std::vector<AbGroup> integral, const std::string& label) {
    if (dim < 0) throw DomainError("explicit: negative dimension");
    if (static_cast<int>(integral.size()) != dim + 1)
        throw DomainError("explicit: expected groups for degrees 0.." + std::to_string(dim));
    if (!integral[0].torsion.empty())
        throw DomainError("explicit: H_0 must be free");
    ManifoldHomology m;
    m.dim = dim;
    m.components = integral[0].rank;
    m.integral = std::move(integral);
    m.label = label;
    if (m.components == 0) {
        for (const AbGroup& g : m.integral)
            if (!g.is_zero()) throw DomainError("explicit: zero H_0 with nonzero higher groups");
        return ManifoldHomology::empty();
    }
    return m;
}

ManifoldHomology kunneth_with(const ManifoldHomology& x, const ManifoldHomology& f) {
    if (x.is_empty() || f.is_empty()) return ManifoldHomology::empty();
    ManifoldHomology m;
    m.dim = x.dim + f.dim;
    m.components = x.components * f.components;
    m.label = "product(" + x.label + "," + f.label + ")";
    m.integral.assign(static_cast<size_t>(m.dim) + 1, AbGroup::zero());
    for (int n = 0; n <= m.dim; ++n) {
        AbGroup sum;
        for (int p = std::max(0, n - f.dim); p <= std::min(n, x.dim); ++p)
            sum = direct_sum(sum, tensor(x.group(p, Ring::Integers), f.group(n - p, Ring::Integers)));
        for (int p = 0; p <= n - 1; ++p) {
            AbGroup t = tor_product(x.group(p, Ring::Integers), f.group(n - 1 - p, Ring::Integers));
            if (!t.is_zero())
                throw UnsupportedTorError("Kunneth over Z needs a torsion-free side in degrees " +
                                          std::to_string(p) + " x " + std::to_string(n - 1 - p) +
                                          " of " + x.label + " x " + f.label);
        }
        m.integral[static_cast<size_t>(n)] = sum;
    }
    return m;
}

}  // namespace roundfold
