#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace roundfold {

// Coefficient rings supported as first-class citizens. Everything mod 2 is
// field arithmetic; the "any commutative ring" quantifier in the graph
// conditions is handled structurally in graphs.hpp, never by ring iteration.
enum class Ring { Integers, ModTwo };

std::string ring_name(Ring r);

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// 64-bit checked arithmetic. Inputs at desk scale keep entries tiny; overflow
// is a hard error, never a silent wrap.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

int64_t gcd_nonneg(int64_t a, int64_t b);
int64_t lcm_checked(int64_t a, int64_t b);

/// Finitely generated abelian group in canonical invariant-factor form:
/// Z^rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
/// Canonical form everywhere means group equality is field-by-field equality.
struct AbGroup {
    int rank = 0;
    std::vector<int64_t> torsion;

    static AbGroup zero() { return AbGroup{}; }
    static AbGroup free(int rank);
    // Z/kZ with the conventions Z/0 = Z and Z/1 = 0.
    static AbGroup cyclic(int64_t k);
    // (Z/2)^dim, the shape of every mod-2 homology group.
    static AbGroup mod_two_vector_space(int dim);

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }
    // Number of generators in the canonical presentation (free then torsion).
    int generators() const { return rank + static_cast<int>(torsion.size()); }
    // Order of the group, or nullopt when infinite.
    std::optional<int64_t> order() const;
    bool is_canonical() const;

    std::string str() const;

    friend bool operator==(const AbGroup&, const AbGroup&) = default;
};

// Sorts the torsion list into a divisibility chain via elementary-divisor
// merging (CRT); throws nothing, always succeeds.
AbGroup canonicalize(int rank, std::vector<int64_t> torsion);

AbGroup direct_sum(const AbGroup& a, const AbGroup& b);

// a (x) b over Z.
AbGroup tensor(const AbGroup& a, const AbGroup& b);

// Tor_1(a, b); nonzero only when both sides carry torsion with common factors.
AbGroup tor_product(const AbGroup& a, const AbGroup& b);

/// Dense row-major integer matrix, the carrier for presentation and
/// homomorphism data. rows or cols may be zero.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int64_t> entries;

    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<int64_t> entries);

    static IntMatrix identity(int n);

    int64_t& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    int64_t at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const;
    std::string str() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct SmithResult {
    // Nonzero invariant factors d_1 | d_2 | ... | d_r, each positive.
    std::vector<int64_t> invariant_factors;
    int rank = 0;
};

// Smith normal form over Z. Empty matrices are fine. Throws OverflowError if
// elimination leaves 64-bit range.
SmithResult smith_normal_form(const IntMatrix& m);

// Rank of m over Z/2.
int rank_mod_two(const IntMatrix& m);

/// An integer matrix representing a homomorphism between presented groups.
/// Columns index source generators, rows index target generators, free
/// generators first, then torsion generators in canonical order. Over ModTwo
/// both groups must be (Z/2)^d and entries live in {0,1}.
///
/// Construction validates torsion compatibility: for each source torsion
/// generator of order d, d times its image column must lie in the target
/// relation lattice. Entries are reduced modulo the target generator orders,
/// so equal maps have equal matrices.
struct HomMatrix {
    AbGroup source;
    AbGroup target;
    IntMatrix matrix;
    Ring ring = Ring::Integers;

    HomMatrix() = default;
    HomMatrix(AbGroup source, AbGroup target, IntMatrix matrix, Ring ring);

    static HomMatrix zero(const AbGroup& source, const AbGroup& target, Ring ring);
    static HomMatrix identity(const AbGroup& group, Ring ring);

    friend bool operator==(const HomMatrix&, const HomMatrix&) = default;
};

AbGroup cokernel(const HomMatrix& h);
bool is_surjective(const HomMatrix& h);

// gcd of the coordinates is 1; the zero vector is not primitive.
bool is_primitive(const std::vector<int64_t>& v, int ambient_rank);

}  // namespace roundfold
