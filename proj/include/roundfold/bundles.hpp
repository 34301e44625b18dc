#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "roundfold/foldmap.hpp"
#include "roundfold/graphs.hpp"

namespace roundfold {

struct MissingBundleDataError : std::runtime_error {
    explicit MissingBundleDataError(const std::string& what) : std::runtime_error(what) {}
};

/// Characteristic-class data of an S^1-bundle over the source manifold,
/// stored as evaluations on the descriptor's distinguished classes: w_1 on
/// the mod-2 H_1 generators of each regular fiber, the Euler class on the
/// free H_2 generators (orientable bundles only), and the section/torus
/// triviality flags per singular component and side. Wildcard defaults stand
/// in for "the same value everywhere"; a consulted key with neither a
/// specific value nor a default is an error, never a silent zero.
struct BundleDescriptor {
    bool orientable = true;
    std::map<std::pair<int, int>, int> w1;  // (region, H_1 generator over Z/2) -> bit
    std::optional<int> w1_default;
    std::map<std::pair<int, int>, int64_t> euler;  // (region, free H_2 generator) -> integer
    std::optional<int64_t> euler_default;
    std::map<std::pair<int, int>, bool> section_trivial;  // (singular k, side 0=inner/1=outer)
    std::optional<bool> section_default;
    std::map<std::pair<int, int>, bool> torus_trivial;
    std::optional<bool> torus_default;

    // Orientable, every evaluation zero, every flag true.
    static BundleDescriptor trivial();

    int w1_on(int region, int gen) const;
    int64_t euler_on(int region, int gen) const;
    bool section_flag(int singular_index, Side side) const;
    bool torus_flag(int singular_index, Side side) const;
};

struct FailedCondition {
    std::string condition;
    std::string location;

    friend bool operator==(const FailedCondition&, const FailedCondition&) = default;
};

struct ApplicabilityReport {
    bool applicable = false;
    std::string rule;
    std::vector<int> starting_set_used;
    std::vector<FailedCondition> failed_conditions;

    std::string str() const;
};

// H^2(F_C; Z) = 0 for every normal fiber, read off stored homology through
// universal coefficients.
bool check_h2_vanishing(const FoldMapDescriptor& d);
bool check_h1_torsion_free(const FoldMapDescriptor& d);

ApplicabilityReport check_theorem_1(const FoldMapDescriptor& d, const BundleDescriptor& b,
                                    const std::vector<int>& s);
ApplicabilityReport check_theorem_2(const FoldMapDescriptor& d, const BundleDescriptor& b,
                                    const std::vector<int>& s);
ApplicabilityReport check_theorem_3(const FoldMapDescriptor& d, const BundleDescriptor& b,
                                    const std::vector<int>& s);
ApplicabilityReport check_theorem_4(const FoldMapDescriptor& d, const BundleDescriptor& b,
                                    const std::vector<int>& s);
ApplicabilityReport check_propositions_34(const FoldMapDescriptor& d, const BundleDescriptor& b);

// Tries the clauses weakest-hypothesis first: Prop 3/4, Thm 2/4, Thm 1/3.
// Returns the first applicable report, or an aggregate failure report.
ApplicabilityReport check_auto(const FoldMapDescriptor& d, const BundleDescriptor& b,
                               const std::vector<int>& s);

}  // namespace roundfold
