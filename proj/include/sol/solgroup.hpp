#pragma once

#include "sol/quadfield.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace sol {

/// Translation (x, y, k) with z-coordinate k*log(lambda).  Keeping the
/// z-part as an integer multiple of the unit logarithm is what lets every
/// lattice word stay inside Q(sqrt(D)).
struct SolTranslation {
    QuadNum x;
    QuadNum y;
    long k = 0;

    SolTranslation(QuadNum px, QuadNum py, long pk) : x(std::move(px)), y(std::move(py)), k(pk) {}
    static SolTranslation identity(FieldContext ctx) {
        return {QuadNum::integer(0, ctx), QuadNum::integer(0, ctx), 0};
    }

    const FieldContext& context() const { return x.context(); }
    bool is_identity() const { return k == 0 && x.is_zero() && y.is_zero(); }
    bool operator==(const SolTranslation& o) const { return k == o.k && x == o.x && y == o.y; }
    bool operator!=(const SolTranslation& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const SolTranslation& t);
};

/// Group product t*u under (a,b,c)(x,y,z) = (x + a e^{-z}, y + b e^{z}, z + c).
SolTranslation compose(const SolTranslation& t, const SolTranslation& u);
/// (x, y, z)^{-1} = (-x e^{z}, -y e^{-z}, -z).
SolTranslation invert(const SolTranslation& t);
/// t^{-1} u^{-1} t u; always lands in the base plane (k = 0).
SolTranslation commutator(const SolTranslation& t, const SolTranslation& u);
/// t^n for any integer n, via the closed geometric-sum form.
SolTranslation power(const SolTranslation& t, long n);

/// The eight isometries fixing the origin, a dihedral group of order 8.
/// They act on translation coordinates as signed permutations of (x, y)
/// together with a sign on the z-part.
enum class PointIsometry {
    Identity,
    HalfTurn,        // (x, y, k) -> (-x, -y,  k)
    QuarterTurn,     // (x, y, k) -> (-y,  x, -k)
    QuarterTurnInv,  // (x, y, k) -> ( y, -x, -k)
    DiagFlip,        // (x, y, k) -> ( y,  x, -k)
    AntiDiagFlip,    // (x, y, k) -> (-y, -x, -k)
    MirrorX,         // (x, y, k) -> ( x, -y,  k)
    MirrorY          // (x, y, k) -> (-x,  y,  k)
};

constexpr std::array<PointIsometry, 8> kAllPointIsometries = {
    PointIsometry::Identity,    PointIsometry::HalfTurn,
    PointIsometry::QuarterTurn, PointIsometry::QuarterTurnInv,
    PointIsometry::DiagFlip,    PointIsometry::AntiDiagFlip,
    PointIsometry::MirrorX,     PointIsometry::MirrorY};

/// g^{-1} t g, the conjugation action on translations.
SolTranslation conjugate_by(PointIsometry g, const SolTranslation& t);

PointIsometry compose(PointIsometry a, PointIsometry b);
PointIsometry invert(PointIsometry g);

const std::string& to_string(PointIsometry g);
PointIsometry point_isometry_from_string(const std::string& s);

}  // namespace sol
