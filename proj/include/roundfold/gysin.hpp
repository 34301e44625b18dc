#pragma once

#include <array>
#include <string>
#include <vector>

#include "roundfold/abelian.hpp"

namespace roundfold {

enum class BasisClass { Fiber, Base };

struct BasisLabel {
    BasisClass kind = BasisClass::Fiber;
    int bundle_index = 0;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Closed simply-connected 4-manifold given by its intersection form on the
/// H_2 basis, the evaluations of the tangent bundle's second Stiefel-Whitney
/// class on that basis, and per-generator fiber/base tags. Euler classes are
/// passed as coordinate vectors in the same basis; evaluations against
/// homology classes go through the form.
struct FourManifold {
    int b2 = 0;
    IntMatrix form;           // symmetric, unimodular
    std::vector<int> w2;      // mod-2 evaluations on the basis classes
    std::vector<BasisLabel> labels;

    // Connected sum of S^2-bundles over S^2, one hyperbolic block per factor
    // with basis (fiber, base). A twisted factor evaluates w_2 as 1 on its
    // base class and 0 on its fiber class.
    static FourManifold connected_sum_of_s2_bundles(const std::vector<bool>& twisted);

    std::vector<std::string> factor_names() const;
};

struct GysinResult {
    std::array<AbGroup, 6> cohomology;  // H^0 .. H^5 of the total space
    AbGroup h1;                         // H_1, identified with H^4
    AbGroup h2;                         // H_2, identified with H^3
};

// Cohomology of the S^1-bundle total space M(alpha) over M with Euler class
// alpha, through the two Gysin-sequence fragments with cup product by alpha
// as connecting map.
GysinResult gysin_h_star(const FourManifold& m, const std::vector<int64_t>& alpha);

// Surjectivity of cup product by alpha, i.e. gcd(form * alpha) = 1.
bool is_simply_connected_total_space(const FourManifold& m, const std::vector<int64_t>& alpha);

// alpha evaluates to zero on every fiber-tagged basis class.
bool theorem5_alpha_constraint(const FourManifold& m, const std::vector<int64_t>& alpha);

enum class FiveKind { ConnectedSumS2xS3, ConnectedSumWithTwisted };

struct FiveManifoldClass {
    FiveKind kind = FiveKind::ConnectedSumS2xS3;
    // Number of S^2 x S^3 summands; the twisted kind carries one extra
    // S^3 ~x S^2 summand. Count 0 means S^5 (or plain S^3 ~x S^2).
    int s2xs3_count = 0;
    AbGroup h1;
    AbGroup h2;

    std::string str() const;
};

// The simply-connected dichotomy: the total space stays a connected sum of
// S^2 x S^3's unless w_2 is nonzero and alpha differs from it mod 2.
FiveManifoldClass classify_five_manifold(const FourManifold& m, const std::vector<int64_t>& alpha);

// H_1 of an oriented circle bundle over the closed oriented genus-g surface:
// Z^{2g} + Z/|k|, with Z/0 = Z.
AbGroup circle_bundle_over_surface_h1(int genus, int64_t euler_number);

struct FamilyReport {
    std::string family;  // "thm6" | "thm7" | "thm8"
    std::vector<int64_t> params;
    AbGroup h1;                          // H_1 of the named total space / bundle piece
    std::vector<AbGroup> restriction_h1; // H_1 of the restrictions named by the theorem
    bool s_trivial = false;
    std::string description;
    std::string axis_preimage;
};

FamilyReport family_h1_theorem6(int64_t k, int m);
FamilyReport family_h1_theorem7(int64_t k);
FamilyReport family_h1_theorem8(int64_t k1, int64_t k2);

// Maps in the theorem-8 family with different |k_1| or |k_2| are never
// smoothly equivalent.
bool theorem8_distinguishes(int64_t k1, int64_t k2, int64_t k3, int64_t k4);

}  // namespace roundfold
