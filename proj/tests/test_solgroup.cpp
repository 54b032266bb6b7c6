#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sol/solgroup.hpp"

#include <array>
#include <random>

using namespace sol;

namespace {

QuadNum q(long an, long ad, long bn, long bd, FieldContext ctx) {
    return {Rational(an, ad), Rational(bn, bd), ctx};
}

std::mt19937_64 rng(77001);

SolTranslation random_translation(FieldContext ctx, long kmax = 3) {
    std::uniform_int_distribution<long> num(-8, 8), den(1, 5), kk(-kmax, kmax);
    return {q(num(rng), den(rng), num(rng), den(rng), ctx),
            q(num(rng), den(rng), num(rng), den(rng), ctx), kk(rng)};
}

// Independent route: the homogeneous right-translation matrices.  The last
// column carries the z-level as an exact integer slot, the inner diagonal
// the matching unit powers, so products and conjugations stay in the field.
struct Mat4 {
    std::array<std::array<QuadNum, 4>, 4> e;

    static Mat4 zero(FieldContext ctx) {
        Mat4 m{};
        for (auto& row : m.e)
            for (auto& v : row) v = QuadNum::integer(0, ctx);
        return m;
    }
    static Mat4 of(const SolTranslation& t) {
        FieldContext ctx = t.context();
        Mat4 m = zero(ctx);
        m.e[0][0] = QuadNum::integer(1, ctx);
        m.e[0][1] = t.x;
        m.e[0][2] = t.y;
        m.e[0][3] = QuadNum::integer(t.k, ctx);
        m.e[1][1] = unit_power(ctx, -t.k);
        m.e[2][2] = unit_power(ctx, t.k);
        m.e[3][3] = QuadNum::integer(1, ctx);
        return m;
    }
    static Mat4 of(PointIsometry g, FieldContext ctx) {
        // read the signed permutation off the conjugation action
        SolTranslation ex =
            conjugate_by(g, {QuadNum::integer(1, ctx), QuadNum::integer(0, ctx), 0});
        SolTranslation ey =
            conjugate_by(g, {QuadNum::integer(0, ctx), QuadNum::integer(1, ctx), 0});
        SolTranslation ez =
            conjugate_by(g, {QuadNum::integer(0, ctx), QuadNum::integer(0, ctx), 1});
        Mat4 m = zero(ctx);
        m.e[0][0] = QuadNum::integer(1, ctx);
        m.e[1][1] = ex.x;
        m.e[1][2] = ex.y;
        m.e[2][1] = ey.x;
        m.e[2][2] = ey.y;
        m.e[3][3] = QuadNum::integer(ez.k, ctx);
        return m;
    }
    Mat4 operator*(const Mat4& o) const {
        FieldContext ctx = e[0][0].context();
        Mat4 r = zero(ctx);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) r.e[i][j] += e[i][k] * o.e[k][j];
        return r;
    }
    SolTranslation translation() const {
        REQUIRE(e[0][3].is_integer());
        return {e[0][1], e[0][2], Integer(e[0][3].a().get_num()).get_si()};
    }
    Mat4 transpose() const {
        Mat4 r = *this;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.e[i][j] = e[j][i];
        return r;
    }
};

}  // namespace

TEST_CASE("group law on pinned values") {
    FieldContext ctx(6);
    QuadNum zero = QuadNum::integer(0, ctx), one = QuadNum::integer(1, ctx);
    SolTranslation id = SolTranslation::identity(ctx);
    SolTranslation t{one, one, 0};
    SolTranslation u{zero, zero, 1};
    CHECK(compose(id, u) == u);
    // (1,1,0)(0,0,1) = (lambda^-1, lambda, 1)
    SolTranslation tu = compose(t, u);
    CHECK(tu == SolTranslation{q(3, 1, -1, 2, ctx), q(3, 1, 1, 2, ctx), 1});
    // the reversed product stays rational: (0,0,1)(1,1,0) = (1,1,1)
    CHECK(compose(u, t) == SolTranslation{one, one, 1});
    CHECK(compose(u, t) != tu);
}

TEST_CASE("inverse on pinned values") {
    FieldContext c6(6);
    CHECK(invert(SolTranslation::identity(c6)) == SolTranslation::identity(c6));
    SolTranslation v{QuadNum::integer(1, c6), QuadNum::integer(1, c6), 1};
    CHECK(invert(v) == SolTranslation{q(-3, 1, -1, 2, c6), q(-3, 1, 1, 2, c6), -1});
    FieldContext c3(3);
    SolTranslation w{QuadNum::integer(1, c3), QuadNum::integer(0, c3), 1};
    CHECK(invert(w) == SolTranslation{q(-3, 2, -1, 2, c3), QuadNum::integer(0, c3), -1});
    for (int i = 0; i < 200; ++i) {
        SolTranslation t = random_translation(c6);
        CHECK(compose(t, invert(t)).is_identity());
        CHECK(compose(invert(t), t).is_identity());
    }
}

TEST_CASE("commutator") {
    FieldContext ctx(6);
    QuadNum one = QuadNum::integer(1, ctx), zero = QuadNum::integer(0, ctx);
    SolTranslation t{one, one, 0};
    SolTranslation u{zero, zero, 1};
    // (lambda^-1 - 1, lambda - 1, 0) = (2 - 2 sqrt 2, 2 + 2 sqrt 2, 0)
    CHECK(commutator(t, u) == SolTranslation{q(2, 1, -1, 2, ctx), q(2, 1, 1, 2, ctx), 0});
    SolTranslation a = random_translation(ctx, 0);
    SolTranslation b = random_translation(ctx, 0);
    CHECK(commutator(a, b).is_identity());
    SolTranslation c = random_translation(ctx);
    CHECK(commutator(c, c).is_identity());
    for (int i = 0; i < 100; ++i)
        CHECK(commutator(random_translation(ctx), random_translation(ctx)).k == 0);
}

TEST_CASE("powers against the closed form") {
    FieldContext ctx(6);
    QuadNum one = QuadNum::integer(1, ctx);
    SolTranslation v{one, one, 1};
    CHECK(power(v, 2) == SolTranslation{q(4, 1, -1, 2, ctx), q(4, 1, 1, 2, ctx), 2});
    for (int i = 0; i < 100; ++i) {
        SolTranslation t = random_translation(ctx);
        CHECK(power(t, 1) == t);
        CHECK(power(t, 0).is_identity());
        CHECK(power(t, -1) == invert(t));
    }
}

TEST_CASE("power is a homomorphism in the exponent") {
    FieldContext ctx(5);
    std::uniform_int_distribution<long> exp(-5, 5);
    for (int i = 0; i < 200; ++i) {
        SolTranslation t = random_translation(ctx);
        long m = exp(rng), n = exp(rng);
        CHECK(power(t, m + n) == compose(power(t, m), power(t, n)));
    }
}

TEST_CASE("powers equal repeated products") {
    FieldContext ctx(7);
    for (int i = 0; i < 60; ++i) {
        SolTranslation t = random_translation(ctx, 2);
        SolTranslation acc = SolTranslation::identity(ctx);
        for (long n = 0; n <= 6; ++n) {
            CHECK(power(t, n) == acc);
            CHECK(power(t, -n) == invert(acc));
            acc = compose(acc, t);
        }
    }
}

TEST_CASE("associativity on random triples") {
    FieldContext ctx(6);
    for (int i = 0; i < 150; ++i) {
        SolTranslation a = random_translation(ctx), b = random_translation(ctx),
                       c = random_translation(ctx);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("conjugation table on pinned values") {
    FieldContext ctx(6);
    QuadNum a = q(5, 3, 1, 2, ctx), b = q(-2, 1, 1, 3, ctx);
    SolTranslation t{a, b, 1};
    CHECK(conjugate_by(PointIsometry::DiagFlip, t) == SolTranslation{b, a, -1});
    CHECK(conjugate_by(PointIsometry::HalfTurn, t) == SolTranslation{-a, -b, 1});
    CHECK(conjugate_by(PointIsometry::QuarterTurn, t) == SolTranslation{-b, a, -1});
    CHECK(conjugate_by(PointIsometry::QuarterTurnInv, t) == SolTranslation{b, -a, -1});
    CHECK(conjugate_by(PointIsometry::AntiDiagFlip, t) == SolTranslation{-b, -a, -1});
    CHECK(conjugate_by(PointIsometry::MirrorX, t) == SolTranslation{a, -b, 1});
    CHECK(conjugate_by(PointIsometry::MirrorY, t) == SolTranslation{-a, b, 1});
    CHECK(conjugate_by(PointIsometry::Identity, t) == t);
}

TEST_CASE("conjugation is a homomorphism for every stabilizer element") {
    FieldContext ctx(6);
    for (PointIsometry g : kAllPointIsometries) {
        for (int i = 0; i < 40; ++i) {
            SolTranslation t = random_translation(ctx), u = random_translation(ctx);
            CHECK(conjugate_by(g, compose(t, u)) ==
                  compose(conjugate_by(g, t), conjugate_by(g, u)));
        }
    }
}

TEST_CASE("stabilizer closes as the dihedral group of order 8") {
    using PI = PointIsometry;
    CHECK(compose(PI::QuarterTurn, PI::QuarterTurn) == PI::HalfTurn);
    CHECK(compose(PI::DiagFlip, PI::DiagFlip) == PI::Identity);
    CHECK(compose(PI::HalfTurn, PI::DiagFlip) == PI::AntiDiagFlip);
    CHECK(compose(PI::DiagFlip, PI::HalfTurn) == PI::AntiDiagFlip);
    CHECK(compose(PI::QuarterTurn, PI::QuarterTurnInv) == PI::Identity);
    CHECK(invert(PI::QuarterTurn) == PI::QuarterTurnInv);
    FieldContext ctx(4);
    for (PI a : kAllPointIsometries) {
        for (PI b : kAllPointIsometries) {
            PI ab = compose(a, b);
            SolTranslation t = random_translation(ctx);
            CHECK(conjugate_by(ab, t) == conjugate_by(b, conjugate_by(a, t)));
        }
    }
}

TEST_CASE("matrix picture agrees with the group operations") {
    FieldContext ctx(6);
    for (int i = 0; i < 120; ++i) {
        SolTranslation t = random_translation(ctx), u = random_translation(ctx);
        CHECK((Mat4::of(t) * Mat4::of(u)).translation() == compose(t, u));
    }
    for (PointIsometry g : kAllPointIsometries) {
        Mat4 G = Mat4::of(g, ctx);
        Mat4 Ginv = G.transpose();  // signed permutations are orthogonal
        for (int i = 0; i < 30; ++i) {
            SolTranslation t = random_translation(ctx);
            CHECK((Ginv * Mat4::of(t) * G).translation() == conjugate_by(g, t));
        }
    }
}

TEST_CASE("labels round-trip") {
    for (PointIsometry g : kAllPointIsometries)
        CHECK(point_isometry_from_string(to_string(g)) == g);
    CHECK_THROWS(point_isometry_from_string("nope"));
}
