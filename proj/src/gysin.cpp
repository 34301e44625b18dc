#include "roundfold/gysin.hpp"

#include <sstream>

namespace roundfold {

FourManifold FourManifold::connected_sum_of_s2_bundles(const std::vector<bool>& twisted) {
    if (twisted.empty()) throw DomainError("connected sum needs at least one factor");
    FourManifold m;
    m.b2 = 2 * static_cast<int>(twisted.size());
    m.form = IntMatrix(m.b2, m.b2);
    for (size_t i = 0; i < twisted.size(); ++i) {
        int base = 2 * static_cast<int>(i);
        m.form.at(base, base + 1) = 1;
        m.form.at(base + 1, base) = 1;
        m.labels.push_back({BasisClass::Fiber, static_cast<int>(i)});
        m.labels.push_back({BasisClass::Base, static_cast<int>(i)});
        m.w2.push_back(0);
        m.w2.push_back(twisted[i] ? 1 : 0);
    }
    return m;
}

std::vector<std::string> FourManifold::factor_names() const {
    std::vector<std::string> names;
    for (size_t i = 0; i + 1 < w2.size(); i += 2) names.push_back(w2[i + 1] ? "twisted" : "trivial");
    return names;
}

namespace {

std::vector<int64_t> form_times(const FourManifold& m, const std::vector<int64_t>& alpha) {
    if (static_cast<int>(alpha.size()) != m.b2)
        throw DomainError("euler class vector must have length " + std::to_string(m.b2));
    std::vector<int64_t> out(static_cast<size_t>(m.b2), 0);
    for (int r = 0; r < m.b2; ++r)
        for (int c = 0; c < m.b2; ++c)
            out[static_cast<size_t>(r)] =
                checked_add(out[static_cast<size_t>(r)],
                            checked_mul(m.form.at(r, c), alpha[static_cast<size_t>(c)]));
    return out;
}

int64_t gcd_of(const std::vector<int64_t>& v) {
    int64_t g = 0;
    for (int64_t x : v) g = gcd_nonneg(g, x);
    return g;
}

}  // namespace

GysinResult gysin_h_star(const FourManifold& m, const std::vector<int64_t>& alpha) {
    std::vector<int64_t> w = form_times(m, alpha);
    int64_t pairing_gcd = gcd_of(w);
    int64_t alpha_gcd = gcd_of(alpha);

    GysinResult out;
    out.cohomology[0] = AbGroup::free(1);
    // H^4(M(a)) = coker(cup a) and H_1 = H^4 by duality; H^1 is its free part.
    AbGroup coker = AbGroup::cyclic(pairing_gcd);
    out.cohomology[1] = coker.rank > 0 ? AbGroup::free(coker.rank) : AbGroup::zero();
    // H^2(M(a)) = H^2(M) / <a>.
    out.cohomology[2] = alpha_gcd == 0 ? AbGroup::free(m.b2)
                                       : canonicalize(m.b2 - 1, {alpha_gcd});
    // H^3(M(a)) = ker(cup a), free.
    int ker_rank = m.b2 - (pairing_gcd == 0 ? 0 : 1);
    out.cohomology[3] = AbGroup::free(ker_rank);
    out.cohomology[4] = coker;
    out.cohomology[5] = AbGroup::free(1);
    out.h1 = coker;
    out.h2 = AbGroup::free(ker_rank);
    return out;
}

bool is_simply_connected_total_space(const FourManifold& m, const std::vector<int64_t>& alpha) {
    return gcd_of(form_times(m, alpha)) == 1;
}

bool theorem5_alpha_constraint(const FourManifold& m, const std::vector<int64_t>& alpha) {
    std::vector<int64_t> w = form_times(m, alpha);
    for (int i = 0; i < m.b2; ++i)
        if (m.labels[static_cast<size_t>(i)].kind == BasisClass::Fiber && w[static_cast<size_t>(i)] != 0)
            return false;
    return true;
}

std::string FiveManifoldClass::str() const {
    std::ostringstream out;
    if (kind == FiveKind::ConnectedSumS2xS3) {
        if (s2xs3_count == 0) return "S^5";
        out << "#" << s2xs3_count << " (S^2 x S^3)";
        return out.str();
    }
    if (s2xs3_count == 0) return "S^3 ~x S^2";
    out << "#" << s2xs3_count << " (S^2 x S^3) # (S^3 ~x S^2)";
    return out.str();
}

FiveManifoldClass classify_five_manifold(const FourManifold& m, const std::vector<int64_t>& alpha) {
    std::vector<int64_t> w = form_times(m, alpha);
    if (gcd_of(w) != 1)
        throw DomainError("classification needs a primitive euler class (simply-connected total space)");
    bool w2_nonzero = false, differs_mod_two = false;
    for (int i = 0; i < m.b2; ++i) {
        int beta = m.w2[static_cast<size_t>(i)] % 2;
        if (beta) w2_nonzero = true;
        if (((w[static_cast<size_t>(i)] - beta) % 2 + 2) % 2 != 0) differs_mod_two = true;
    }
    FiveManifoldClass out;
    out.h1 = AbGroup::zero();
    out.h2 = AbGroup::free(m.b2 - 1);
    if (w2_nonzero && differs_mod_two) {
        out.kind = FiveKind::ConnectedSumWithTwisted;
        out.s2xs3_count = m.b2 - 2;
    } else {
        out.kind = FiveKind::ConnectedSumS2xS3;
        out.s2xs3_count = m.b2 - 1;
    }
    return out;
}

AbGroup circle_bundle_over_surface_h1(int genus, int64_t euler_number) {
    if (genus < 0) throw DomainError("negative genus");
    return direct_sum(AbGroup::free(2 * genus), AbGroup::cyclic(euler_number));
}

FamilyReport family_h1_theorem6(int64_t k, int m) {
    if (m < 5) throw DomainError("family_h1_theorem6 needs m >= 5 (so that m-2 >= 3)");
    FamilyReport r;
    r.family = "thm6";
    r.params = {k};
    r.h1 = circle_bundle_over_surface_h1(1, k);
    r.s_trivial = k == 0;
    std::ostringstream desc;
    desc << "M_" << k << " is homeomorphic to the product of the circle bundle over the torus with"
         << " euler number " << k << " and S^" << (m - 2);
    r.description = desc.str();
    r.axis_preimage = "S^1 x S^" + std::to_string(m - 2) + " x S^1";
    return r;
}

FamilyReport family_h1_theorem7(int64_t k) {
    FamilyReport r;
    r.family = "thm7";
    r.params = {k};
    r.h1 = direct_sum(AbGroup::free(1), AbGroup::cyclic(k));
    r.restriction_h1 = {direct_sum(AbGroup::free(2), AbGroup::cyclic(k))};
    r.s_trivial = k == 0;
    std::ostringstream desc;
    desc << "M_" << k << " is an oriented circle bundle over the source with euler class " << k
         << " times the generator";
    r.description = desc.str();
    r.axis_preimage = "product of the original axis preimage and S^1";
    return r;
}

FamilyReport family_h1_theorem8(int64_t k1, int64_t k2) {
    FamilyReport r;
    r.family = "thm8";
    r.params = {k1, k2};
    r.restriction_h1 = {direct_sum(AbGroup::free(2), AbGroup::cyclic(k1)),
                        direct_sum(AbGroup::free(2), AbGroup::cyclic(k2))};
    if (k1 != 0 && k2 != 0)
        r.h1 = direct_sum(AbGroup::free(2), AbGroup::cyclic(lcm_checked(k1, k2)));
    else
        r.h1 = AbGroup::free(2);
    r.s_trivial = !(k1 != 0 && k2 != 0);
    std::ostringstream desc;
    desc << "M_(" << k1 << "," << k2 << ") is an oriented circle bundle over the connected sum with"
         << " euler class " << k1 << "*nu_1 + " << k2 << "*nu_2";
    r.description = desc.str();
    r.axis_preimage = "product of the original axis preimage and S^1";
    return r;
}

bool theorem8_distinguishes(int64_t k1, int64_t k2, int64_t k3, int64_t k4) {
    auto abs64 = [](int64_t x) { return x < 0 ? -x : x; };
    return abs64(k1) != abs64(k3) || abs64(k2) != abs64(k4);
}

}  // namespace roundfold
