#pragma once

#include "sol/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sol {

struct CertificateNotApplicable : LatticeError {
    using LatticeError::LatticeError;
};

enum class PointGroup { Id, C2, Dr, Drbar, D2bar, C4 };

const std::string& to_string(PointGroup g);

enum class Centering { Centred, Primitive, None };

const std::string& to_string(Centering c);

/// True iff conjugation by g maps all three generators back into the
/// lattice.  For the k-reversing isometries the third-generator test
/// composes the conjugate with tau3 itself, so membership never sees a
/// negative z-level.
bool is_symmetry(PointIsometry g, const SolLattice& L);

/// Largest admissible subgroup of the origin stabilizer leaving the
/// lattice invariant.  Axis reflections would force an isotropic base
/// vector and are rejected by construction.
PointGroup point_group(const SolLattice& L);

/// True when the offset of the third generator lies in the base lattice
/// (so the lattice admits a generator set with a purely vertical tau3).
bool offset_in_base(const SolLattice& L);

/// Whether some base-lattice translate of the offset satisfies
/// (tau3^delta) tau3 = identity; with_antidiag selects the antidiagonal
/// reflection's variant of the word.
bool zero_word_reachable(const SolLattice& L, bool with_antidiag);

/// Whether some base-lattice translate of the offset puts the word
/// (tau3^delta)^{-1} tau3 on the z-axis.
bool z_line_reachable(const SolLattice& L, bool with_antidiag);

/// Classification attribute: case I always has the vertical sublattice;
/// in case II it exists exactly when a diagonal reflection is present and
/// the offset class meets the matching eigenline, the vanishing-word
/// configuration taking precedence.
bool z_sublattice_exists(const SolLattice& L);

struct AxisVectors {
    std::pair<Integer, Integer> on_diag;      // coordinates of the primitive vector on y = x
    std::pair<Integer, Integer> on_antidiag;  // on y = -x
    Integer index;                            // index of their span in the base lattice
};

/// Primitive lattice vectors on the two diagonal symmetry axes, if both
/// exist; the index of their span decides centred (2) vs primitive (1).
std::optional<AxisVectors> axis_vectors(const SolLattice& L);

Centering centering(const SolLattice& L);

enum class CertificateKind { CentredDr, PrimitiveDr, CentredC2, PrimitiveC2, C4 };

const std::string& to_string(CertificateKind k);

/// Integer data expressing the reflection / rotation words of tau3 in a
/// symmetry-adapted basis, together with the side relations among them.
struct Certificate {
    CertificateKind kind;
    std::map<std::string, QuadNum> values;    // exact solved coordinates and ratios
    std::map<std::string, Integer> integers;  // the entries that are rational integers
    std::vector<CheckResult> relations;
};

/// Requires case II and a nontrivial point group.
Certificate certificate(const SolLattice& L);

/// Normal-form bases used by the certificates: (u, u^diag) for a centred
/// base, the axis pair for a primitive base, (u, u^quarter) for C4.
std::optional<std::pair<SolTranslation, SolTranslation>> centred_normal_basis(const SolLattice& L);
std::optional<std::pair<SolTranslation, SolTranslation>> primitive_normal_basis(const SolLattice& L);
std::optional<std::pair<SolTranslation, SolTranslation>> quarter_normal_basis(const SolLattice& L);

}  // namespace sol
