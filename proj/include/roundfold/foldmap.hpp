#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "roundfold/homology.hpp"

namespace roundfold {

// Shape of the image f(M): a disc D^n, an annulus S^{n-1} x [-1,1], or the
// degenerate data-model case where the unbounded region carries a fiber.
enum class ImageKind { Disc, Annulus, FullPlaneComplement };

std::string image_kind_name(ImageKind k);

inline constexpr int kStoredDegrees = 3;  // inclusion maps kept for H_0, H_1, H_2

enum class Side { Inner, Outer };

/// Closure of one connected component of the regular value set. Region 0 is
/// the proper-core region; indices increase outward and the last region is
/// the unbounded one.
struct Region {
    int index = 0;
    ManifoldHomology fiber;  // regular fiber over a point of this region
    bool is_proper_core_region() const { return index == 0; }
};

/// One connected component of the singular value set, with its normal fiber
/// F_C and the inclusion-induced maps H_k(boundary fiber) -> H_k(F_C) for
/// k = 0,1,2 over Z and Z/2. A missing entry means the descriptor does not
/// carry that map; graph construction then fails with a descriptor-incomplete
/// error rather than guessing.
struct SingularComponent {
    int index = 1;  // 1..l; separates regions index-1 and index
    ManifoldHomology normal_fiber;
    ManifoldHomology inner_boundary_fiber;
    ManifoldHomology outer_boundary_fiber;
    // [degree][ring] with ring 0 = Z, 1 = Z/2
    std::array<std::array<std::optional<HomMatrix>, 2>, kStoredDegrees> incl_inner;
    std::array<std::array<std::optional<HomMatrix>, 2>, kStoredDegrees> incl_outer;

    const std::optional<HomMatrix>& incl(Side side, int degree, Ring ring) const;
    std::optional<HomMatrix>& incl(Side side, int degree, Ring ring);

    friend bool operator==(const SingularComponent&, const SingularComponent&);
};

struct FoldMapFlags {
    bool l_trivial = true;
    std::optional<bool> s_trivial;  // unset = undetermined

    friend bool operator==(const FoldMapFlags&, const FoldMapFlags&) = default;
};

/// Combinatorial record of a round fold map in normal form. The region
/// adjacency is always a path (concentric singular spheres), so regions are
/// stored innermost to outermost and singular[k] sits between regions k and
/// k+1.
struct FoldMapDescriptor {
    int m = 0;  // source dimension
    int n = 0;  // target dimension
    int l = 0;  // number of singular components
    ImageKind image_kind = ImageKind::Disc;
    std::vector<Region> regions;             // length l+1
    std::vector<SingularComponent> singular; // length l
    FoldMapFlags flags;

    friend bool operator==(const FoldMapDescriptor&, const FoldMapDescriptor&);
};

struct Diagnostic {
    std::string field;
    std::string message;
};

// Empty result means every structural invariant holds. Diagnostics, never
// exceptions: a malformed descriptor is data to report on, not a crash.
std::vector<Diagnostic> validate(const FoldMapDescriptor& d);

void require_valid(const FoldMapDescriptor& d, const std::string& context);

// Whether the glued-up source manifold is connected, read off the degree-0
// component maps.
bool is_connected_source(const FoldMapDescriptor& d);

// ---- catalog -------------------------------------------------------------

// Special generic map on a homotopy sphere with connected singular set.
FoldMapDescriptor special_generic_sphere(int m, int n);
// Round fold map on an F-bundle over S^n; F closed, connected, non-empty.
FoldMapDescriptor bundle_over_sphere(const ManifoldHomology& fiber, int n);
// Round fold map on a connected sum of l sphere bundles over S^n (m >= 2n).
FoldMapDescriptor connected_sum_sphere_bundles(int m, int n, int l);
// Special generic map with two singular spheres; source S^{n-1} x S^{m-n+1}.
FoldMapDescriptor two_component_special_generic(int m, int n);
// Spun map with annulus image and axis preimage S^1 x S^{m-n} (four singular
// components).
FoldMapDescriptor spun_torus_family(int m, int n);
// Spun map with disc image and axis preimage a punctured S^1 x S^{m-n} (three
// singular components).
FoldMapDescriptor spun_disc_family(int m, int n);
// Connected sum of two spun_disc_family-type maps (five singular components).
FoldMapDescriptor case3_connected_sum(int m, int n);

// Dispatch by name with positional string parameters, as used by the CLI.
FoldMapDescriptor catalog(const std::string& name, const std::vector<std::string>& params);

std::vector<std::string> catalog_names();

}  // namespace roundfold
