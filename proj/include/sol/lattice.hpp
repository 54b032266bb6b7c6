#pragma once

#include "sol/quadfield.hpp"
#include "sol/solgroup.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sol {

struct LatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotALatticeParameter : LatticeError {
    using LatticeError::LatticeError;
};
struct NotRegular : LatticeError {
    using LatticeError::LatticeError;
};
struct DegenerateBasis : LatticeError {
    using LatticeError::LatticeError;
};
struct IsotropicLattice : LatticeError {
    using LatticeError::LatticeError;
};

/// Integer holonomy matrix (p q; r s) with ps - qr = 1 and trace N >= 3.
struct LatticeMatrix {
    long p = 0, q = 0, r = 0, s = 0;

    long trace() const { return p + s; }
    long det() const { return p * s - q * r; }
    bool operator==(const LatticeMatrix&) const = default;
};

/// Rows are the base-plane coordinates of the first two generators.
struct BasisMatrix {
    QuadNum t11, t12, t21, t22;

    QuadNum det() const { return t11 * t22 - t12 * t21; }
};

/// Exact coordinates of a base-plane vector in the (tau1, tau2) basis.
struct BaseCoords {
    QuadNum c1, c2;
};

class SolLattice {
public:
    /// Builds a lattice from three generators; derives the holonomy matrix
    /// from the basis and rejects anything that is not a regular lattice
    /// (non-integral holonomy, dependent basis, isotropic base vector).
    static SolLattice create(SolTranslation tau1, SolTranslation tau2, SolTranslation tau3);

    /// No validation; for feeding deliberately broken data to the verifiers.
    static SolLattice unchecked(SolTranslation tau1, SolTranslation tau2, SolTranslation tau3,
                                LatticeMatrix phi) {
        return SolLattice(std::move(tau1), std::move(tau2), std::move(tau3), phi);
    }

    const FieldContext& context() const { return tau1_.context(); }
    const SolTranslation& tau1() const { return tau1_; }
    const SolTranslation& tau2() const { return tau2_; }
    const SolTranslation& tau3() const { return tau3_; }
    const LatticeMatrix& phi() const { return phi_; }
    BasisMatrix basis() const { return {tau1_.x, tau1_.y, tau2_.x, tau2_.y}; }

    /// Exact solve of v = c1*tau1 + c2*tau2 over Q(sqrt(D)).
    BaseCoords base_coords(const QuadNum& vx, const QuadNum& vy) const;

private:
    SolLattice(SolTranslation t1, SolTranslation t2, SolTranslation t3, LatticeMatrix phi)
        : tau1_(std::move(t1)), tau2_(std::move(t2)), tau3_(std::move(t3)), phi_(phi) {}

    SolTranslation tau1_, tau2_, tau3_;
    LatticeMatrix phi_;
};

/// Lattice with basis tau1 = (1, mu), tau2 fixed by the eigenvalue ratio
/// relations for the (N, p, q) parameters; tau3 = (0, 0, 1).
/// Preconditions: q > 0, 0 <= p <= floor(N/2), q divides p(N-p) - 1, mu != 0.
SolLattice canonical_basis(long N, long p, long q, const QuadNum& mu);
SolLattice canonical_basis(long N, long p, long q);

/// All integral holonomy data for a basis, from the eigenvalue sandwich
/// formula; throws NotRegular when any entry fails to be a rational integer.
LatticeMatrix phi_from_basis(const BasisMatrix& T, FieldContext ctx);

/// Solves v = m*tau1 + n*tau2 for rational integers; v must have k = 0.
std::optional<std::pair<Integer, Integer>> base_membership(const SolTranslation& v,
                                                           const SolLattice& L);

struct WordCoordinates {
    Integer m, n;
    long k;
};

/// Membership in the full lattice via the normal form w * tau3^k.
std::optional<WordCoordinates> lattice_membership(const SolTranslation& g, const SolLattice& L);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct PresentationReport {
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Exact verification of the defining relations: commuting base pair,
/// conjugation of tau1/tau2 by tau3 against the holonomy coefficients,
/// the eigenvalue sandwich T^-1 Phi T, and trace = lambda + lambda^-1.
PresentationReport verify_presentation(const SolLattice& L);

struct IsotropyResult {
    bool ok;
    std::string axis;                                // "e1" or "e2" when failing
    std::optional<std::pair<Integer, Integer>> witness;  // m*tau1 + n*tau2 on the axis
};

/// Checks that no integer combination of the base generators lands on a
/// coordinate axis (such a vector would contradict discreteness).
IsotropyResult isotropy_check(const SolTranslation& tau1, const SolTranslation& tau2);
IsotropyResult isotropy_check(const SolLattice& L);

/// Canonical representative of a base-plane vector modulo the base lattice,
/// with basis coordinates in [0, 1)^2.
std::pair<QuadNum, QuadNum> reduce_offset(const std::pair<QuadNum, QuadNum>& v,
                                          const SolLattice& L);

/// Conjugating the eigenvalue matrix into the 45-degree rotated basis must
/// give the symmetric matrix with entries N/2 and sqrt(D)/2 (the rotation
/// factors of the basis change cancel, so this stays exact).
bool rotated_basis_check(const SolLattice& L);

/// Basis change (tau1, tau2) -> (u*tau1 + v*tau2, w*tau1 + wbar*tau2),
/// u*wbar - v*w = +-1; same group, conjugated holonomy.
SolLattice rebase(const SolLattice& L, long u, long v, long w, long wbar);

/// Multiplies the base parts of all three generators by a nonzero rational.
SolLattice scale_base(const SolLattice& L, const Rational& c);

/// Replaces the offset of tau3 (base part), keeping the basis.
SolLattice with_offset(const SolLattice& L, const QuadNum& ox, const QuadNum& oy);

}  // namespace sol
