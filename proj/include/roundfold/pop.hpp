#pragma once

#include <optional>
#include <string>

#include "roundfold/bundles.hpp"
#include "roundfold/foldmap.hpp"
#include "roundfold/gysin.hpp"

namespace roundfold {

/// Outcome of a P-operation by a fiber F: every piece of the source data is
/// replaced by its product with F, with inclusion maps tensored by the
/// identity on H_*(F). Only the fiber/homology level is tracked; the Morse
/// functions chosen inside each piece affect the map but not this data.
struct POperationResult {
    FoldMapDescriptor result;
    ManifoldHomology fiber_used;
    std::string provenance;
    std::optional<ApplicabilityReport> report;
};

// Requires report.applicable. S-triviality of the result is never inferred
// here; it is set only by the family reports that quote a theorem for it.
POperationResult apply_p_operation(const FoldMapDescriptor& d, const ManifoldHomology& fiber,
                                   const ApplicabilityReport& report);

// The trivial-restriction route: the bundle is declared trivial over every
// f^{-1}(N(C)), so no applicability engine is consulted.
POperationResult apply_p_operation_trivial(const FoldMapDescriptor& d, const ManifoldHomology& fiber);

enum class S1Family { Thm5, Thm6, Thm7, Thm8 };

std::string family_name(S1Family f);

// Structural recognition of the section-4 families by image kind and the
// fiber component pattern across regions.
S1Family recognize_family(const FoldMapDescriptor& d);

struct S1FamilyInput {
    std::vector<int64_t> ks;             // thm6: {k}; thm7: {k}; thm8: {k1,k2}
    std::optional<FourManifold> base;    // thm5 only
    std::vector<int64_t> alpha;          // thm5 only
};

struct S1FamilyReport {
    S1Family family = S1Family::Thm6;
    POperationResult op;
    std::optional<FamilyReport> homology;         // thm6/7/8
    std::optional<FiveManifoldClass> five_class;  // thm5
    std::string text;
};

// Applies the P-operation by S^1 and attaches the family's homology or
// classification data.
S1FamilyReport s1_family_report(const FoldMapDescriptor& d, const S1FamilyInput& input);

}  // namespace roundfold
