#include "sol/solgroup.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

namespace sol {

std::ostream& operator<<(std::ostream& os, const SolTranslation& t) {
    return os << "(" << t.x << ", " << t.y << ", " << t.k << ")";
}

SolTranslation compose(const SolTranslation& t, const SolTranslation& u) {
    return {u.x + t.x * unit_power(t.context(), -u.k),
            u.y + t.y * unit_power(t.context(), u.k),
            t.k + u.k};
}

SolTranslation invert(const SolTranslation& t) {
    return {-t.x * unit_power(t.context(), t.k),
            -t.y * unit_power(t.context(), -t.k),
            -t.k};
}

SolTranslation commutator(const SolTranslation& t, const SolTranslation& u) {
    return compose(compose(compose(invert(t), invert(u)), t), u);
}

SolTranslation power(const SolTranslation& t, long n) {
    FieldContext ctx = t.context();
    if (n == 0) return SolTranslation::identity(ctx);
    if (t.k == 0) {
        QuadNum m = QuadNum::integer(n, ctx);
        return {t.x * m, t.y * m, 0};
    }
    // Geometric sums; valid for negative n as well since lambda^k != 1.
    QuadNum one = QuadNum::integer(1, ctx);
    QuadNum lk_inv = unit_power(ctx, -t.k);
    QuadNum lk = unit_power(ctx, t.k);
    QuadNum gx = (one - unit_power(ctx, -n * t.k)) / (one - lk_inv);
    QuadNum gy = (unit_power(ctx, n * t.k) - one) / (lk - one);
    return {t.x * gx, t.y * gy, n * t.k};
}

namespace {

struct Act {
    bool swap;
    int sx, sy, sk;
    bool operator==(const Act&) const = default;
};

constexpr Act kActs[8] = {
    {false, +1, +1, +1},  // Identity
    {false, -1, -1, +1},  // HalfTurn
    {true, -1, +1, -1},   // QuarterTurn
    {true, +1, -1, -1},   // QuarterTurnInv
    {true, +1, +1, -1},   // DiagFlip
    {true, -1, -1, -1},   // AntiDiagFlip
    {false, +1, -1, +1},  // MirrorX
    {false, -1, +1, +1},  // MirrorY
};

const Act& act_of(PointIsometry g) { return kActs[static_cast<int>(g)]; }

// Action of "first a, then b" on coordinates.
Act chain(const Act& a, const Act& b) {
    Act r{};
    r.swap = a.swap != b.swap;
    r.sk = a.sk * b.sk;
    if (!a.swap && !b.swap) {
        r.sx = a.sx * b.sx;
        r.sy = a.sy * b.sy;
    } else if (!a.swap && b.swap) {
        r.sx = b.sx * a.sy;
        r.sy = b.sy * a.sx;
    } else if (a.swap && !b.swap) {
        r.sx = b.sx * a.sx;
        r.sy = b.sy * a.sy;
    } else {
        r.sx = b.sx * a.sy;
        r.sy = b.sy * a.sx;
    }
    return r;
}

PointIsometry lookup(const Act& a) {
    for (int i = 0; i < 8; ++i)
        if (kActs[i] == a) return static_cast<PointIsometry>(i);
    throw std::logic_error("point isometry composition left the group");
}

}  // namespace

SolTranslation conjugate_by(PointIsometry g, const SolTranslation& t) {
    const Act& a = act_of(g);
    QuadNum nx = a.swap ? t.y : t.x;
    QuadNum ny = a.swap ? t.x : t.y;
    if (a.sx < 0) nx = -nx;
    if (a.sy < 0) ny = -ny;
    return {std::move(nx), std::move(ny), a.sk * t.k};
}

PointIsometry compose(PointIsometry a, PointIsometry b) {
    // tau^(ab) = (tau^a)^b, so the action of ab applies a first.
    return lookup(chain(act_of(a), act_of(b)));
}

PointIsometry invert(PointIsometry g) {
    for (PointIsometry h : kAllPointIsometries)
        if (compose(g, h) == PointIsometry::Identity) return h;
    throw std::logic_error("unreachable");
}

const std::string& to_string(PointIsometry g) {
    static const std::string names[8] = {"id",        "half_turn",    "quarter_turn",
                                         "quarter_turn_inv", "diag_flip", "antidiag_flip",
                                         "mirror_x",  "mirror_y"};
    return names[static_cast<int>(g)];
}

PointIsometry point_isometry_from_string(const std::string& s) {
    for (PointIsometry g : kAllPointIsometries)
        if (to_string(g) == s) return g;
    throw std::invalid_argument("unknown point isometry label: " + s);
}

}  // namespace sol
