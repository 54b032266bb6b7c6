#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sol/lattice.hpp"

#include <random>

using namespace sol;

namespace {

QuadNum q(long an, long ad, long bn, long bd, FieldContext ctx) {
    return {Rational(an, ad), Rational(bn, bd), ctx};
}

std::mt19937_64 rng(515253);

}  // namespace

TEST_CASE("canonical basis carries the eigenvalue ratios") {
    SolLattice L = canonical_basis(6, 0, 1);
    FieldContext ctx = L.context();
    CHECK(L.tau1() == SolTranslation{QuadNum::integer(1, ctx), QuadNum::integer(2, ctx), 0});
    // tau2 = (3 - 2 sqrt 2, 2 (3 + 2 sqrt 2), 0)
    CHECK(L.tau2() == SolTranslation{q(3, 1, -1, 2, ctx), q(6, 1, 1, 1, ctx), 0});
    CHECK(L.phi() == LatticeMatrix{0, 1, -1, 6});

    SolLattice Lb = canonical_basis(6, 1, 1);
    CHECK(Lb.phi() == LatticeMatrix{1, 1, 4, 5});
    CHECK(Lb.tau2().x == q(2, 1, -1, 2, Lb.context()));
    CHECK(Lb.tau2().y == q(4, 1, 1, 1, Lb.context()));
}

TEST_CASE("divisor precondition") {
    CHECK_THROWS_AS(canonical_basis(6, 1, 3), NotALatticeParameter);
    CHECK_THROWS_AS(canonical_basis(6, 4, 1), NotALatticeParameter);  // p > N/2
    CHECK_THROWS_AS(canonical_basis(6, 0, -1), NotALatticeParameter);
    FieldContext ctx(6);
    CHECK_THROWS_AS(canonical_basis(6, 0, 1, QuadNum::integer(0, ctx)), DegenerateBasis);
}

TEST_CASE("holonomy from basis") {
    SolLattice L = canonical_basis(6, 0, 1);
    CHECK(phi_from_basis(L.basis(), L.context()) == LatticeMatrix{0, 1, -1, 6});
    FieldContext ctx(6);
    SolLattice L2 = canonical_basis(6, 1, 2, QuadNum::integer(1, ctx));
    CHECK(L2.phi() == LatticeMatrix{1, 2, 2, 5});
    // identity basis is no lattice basis: the diagonal matrix is irrational
    BasisMatrix eye{QuadNum::integer(1, ctx), QuadNum::integer(0, ctx), QuadNum::integer(0, ctx),
                    QuadNum::integer(1, ctx)};
    CHECK_THROWS_AS(phi_from_basis(eye, ctx), NotRegular);
}

TEST_CASE("holonomy round-trips over the parameter table") {
    for (long N = 3; N <= 12; ++N) {
        FieldContext ctx(N);
        QuadNum lam = fundamental_unit(ctx);
        const QuadNum mus[] = {QuadNum::integer(1, ctx), QuadNum::integer(2, ctx),
                               QuadNum::integer(3, ctx), lam, lam.conj()};
        for (long p = 0; 2 * p <= N; ++p) {
            long v = p * (N - p) - 1;
            long av = v < 0 ? -v : v;
            for (long qq = 1; qq <= av; ++qq) {
                if (av % qq != 0) continue;
                for (const QuadNum& mu : mus) {
                    SolLattice L = canonical_basis(N, p, qq, mu);
                    CHECK(L.phi() == LatticeMatrix{p, qq, v / qq, N - p});
                    CHECK(phi_from_basis(L.basis(), ctx) == L.phi());
                }
            }
        }
    }
}

TEST_CASE("base membership solves the integer system") {
    SolLattice L = canonical_basis(6, 0, 1);
    FieldContext ctx = L.context();
    SolTranslation sum = compose(L.tau1(), L.tau2());
    auto mn = base_membership(sum, L);
    REQUIRE(mn.has_value());
    CHECK(mn->first == 1);
    CHECK(mn->second == 1);
    // explicit value: (4 - 2 sqrt 2, 2 (4 + 2 sqrt 2))
    CHECK(sum.x == q(4, 1, -1, 2, ctx));
    CHECK(sum.y == q(8, 1, 1, 1, ctx));

    SolTranslation half{q(1, 2, 0, 1, ctx), QuadNum::integer(1, ctx), 0};
    CHECK_FALSE(base_membership(half, L).has_value());

    std::uniform_int_distribution<long> mm(-10, 10);
    for (int i = 0; i < 300; ++i) {
        long m = mm(rng), n = mm(rng);
        QuadNum qm = QuadNum::integer(m, ctx), qn = QuadNum::integer(n, ctx);
        SolTranslation v{qm * L.tau1().x + qn * L.tau2().x, qm * L.tau1().y + qn * L.tau2().y, 0};
        auto got = base_membership(v, L);
        REQUIRE(got.has_value());
        CHECK(got->first == m);
        CHECK(got->second == n);
    }
}

TEST_CASE("full membership factors through the vertical generator") {
    SolLattice L = canonical_basis(6, 1, 2);
    FieldContext ctx = L.context();
    auto w = lattice_membership(L.tau3(), L);
    REQUIRE(w.has_value());
    CHECK(w->m == 0);
    CHECK(w->n == 0);
    CHECK(w->k == 1);
    auto w2 = lattice_membership(compose(L.tau1(), L.tau3()), L);
    REQUIRE(w2.has_value());
    CHECK(w2->m == 1);
    CHECK(w2->n == 0);
    CHECK(w2->k == 1);
    CHECK_FALSE(
        lattice_membership(SolTranslation{q(1, 2, 0, 1, ctx), QuadNum::integer(0, ctx), 0}, L)
            .has_value());
    // random words tau1^m tau2^n tau3^k reproduce their coordinates
    std::uniform_int_distribution<long> mm(-6, 6), kk(-3, 3);
    for (int i = 0; i < 200; ++i) {
        long m = mm(rng), n = mm(rng), k = kk(rng);
        SolTranslation g = compose(
            compose(power(L.tau1(), m), power(L.tau2(), n)), power(L.tau3(), k));
        auto got = lattice_membership(g, L);
        REQUIRE(got.has_value());
        CHECK(got->m == m);
        CHECK(got->n == n);
        CHECK(got->k == k);
    }
}

TEST_CASE("presentation report") {
    SolLattice L = canonical_basis(6, 0, 1);
    PresentationReport rep = verify_presentation(L);
    CHECK(rep.ok());
    // the conjugate of tau1 is exactly 0*tau1 + 1*tau2 here
    SolTranslation conj = compose(compose(invert(L.tau3()), L.tau1()), L.tau3());
    CHECK(conj == L.tau2());

    FieldContext c3(3);
    CHECK(verify_presentation(canonical_basis(3, 0, 1, QuadNum::integer(1, c3))).ok());

    // tampering with tau2 breaks the conjugation relation
    SolLattice bad = SolLattice::unchecked(
        L.tau1(),
        SolTranslation{L.tau2().x + QuadNum::integer(1, L.context()), L.tau2().y, 0}, L.tau3(),
        L.phi());
    PresentationReport rep2 = verify_presentation(bad);
    CHECK_FALSE(rep2.ok());
}

TEST_CASE("isotropy exclusion") {
    CHECK(isotropy_check(canonical_basis(6, 0, 1)).ok);
    FieldContext ctx(6);
    SolTranslation t1{QuadNum::integer(1, ctx), QuadNum::integer(1, ctx), 0};
    SolTranslation t2{QuadNum::integer(2, ctx), QuadNum::integer(3, ctx), 0};
    IsotropyResult res = isotropy_check(t1, t2);
    CHECK_FALSE(res.ok);
    CHECK(res.axis == "e1");
    REQUIRE(res.witness.has_value());
    // the witness combination really lands on the x-axis
    auto [m, n] = *res.witness;
    QuadNum y = QuadNum::rational(Rational(m), ctx) * t1.y +
                QuadNum::rational(Rational(n), ctx) * t2.y;
    CHECK(y.is_zero());
    CHECK(!(QuadNum::rational(Rational(m), ctx) * t1.x +
            QuadNum::rational(Rational(n), ctx) * t2.x)
               .is_zero());
    // irrational ratios on both axes pass
    SolTranslation t3{fundamental_unit(ctx).conj(), fundamental_unit(ctx), 0};
    CHECK(isotropy_check(t1, t3).ok);
    CHECK_THROWS_AS(SolLattice::create(t1, t2, SolTranslation{QuadNum::integer(0, ctx),
                                                              QuadNum::integer(0, ctx), 1}),
                    IsotropicLattice);
}

TEST_CASE("offset reduction lands in the unit box") {
    SolLattice L = canonical_basis(6, 0, 1);
    FieldContext ctx = L.context();
    auto red = reduce_offset({L.tau1().x, L.tau1().y}, L);
    CHECK(red.first.is_zero());
    CHECK(red.second.is_zero());
    QuadNum half = q(1, 2, 0, 1, ctx);
    QuadNum hx = half * (L.tau1().x + L.tau2().x);
    QuadNum hy = half * (L.tau1().y + L.tau2().y);
    auto red2 = reduce_offset({hx, hy}, L);
    CHECK(red2.first == hx);
    CHECK(red2.second == hy);
    QuadNum th = q(3, 2, 0, 1, ctx);
    auto red3 = reduce_offset({th * L.tau1().x, th * L.tau1().y}, L);
    CHECK(red3.first == half * L.tau1().x);
    CHECK(red3.second == half * L.tau1().y);
    // random offsets: reduced coordinates must lie in [0, 1)
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    for (int i = 0; i < 200; ++i) {
        QuadNum ox = q(num(rng), den(rng), num(rng), den(rng), ctx);
        QuadNum oy = q(num(rng), den(rng), num(rng), den(rng), ctx);
        auto r = reduce_offset({ox, oy}, L);
        BaseCoords c = L.base_coords(r.first, r.second);
        CHECK(c.c1.sign() != Sign::Negative);
        CHECK(c.c2.sign() != Sign::Negative);
        CHECK((c.c1 - QuadNum::integer(1, ctx)).sign() == Sign::Negative);
        CHECK((c.c2 - QuadNum::integer(1, ctx)).sign() == Sign::Negative);
        // and differ from the input by a lattice vector
        auto mem = base_membership(SolTranslation{ox - r.first, oy - r.second, 0}, L);
        CHECK(mem.has_value());
    }
}

TEST_CASE("rotated basis sandwich") {
    for (long N : {3L, 4L, 6L, 9L, 12L}) {
        SolLattice L = canonical_basis(N, 0, 1);
        CHECK(rotated_basis_check(L));
    }
}

TEST_CASE("rebasing keeps the group") {
    SolLattice L = canonical_basis(6, 0, 1);
    SolLattice R = rebase(L, 1, 0, 1, 1);
    CHECK(R.phi().trace() == 6);
    CHECK(R.phi().det() == 1);
    CHECK(R.phi() == LatticeMatrix{-1, 1, -8, 7});
    // the rebased generators are members of the original lattice and back
    CHECK(base_membership(R.tau1(), L).has_value());
    CHECK(base_membership(R.tau2(), L).has_value());
    CHECK(base_membership(L.tau1(), R).has_value());
    CHECK_THROWS_AS(rebase(L, 1, 1, 1, 1), DegenerateBasis);
}

TEST_CASE("base rescaling does not move the holonomy") {
    SolLattice L = canonical_basis(6, 1, 2);
    for (const Rational& c : {Rational(2), Rational(1, 3), Rational(-5, 7)}) {
        SolLattice S = scale_base(L, c);
        CHECK(S.phi() == L.phi());
        CHECK(verify_presentation(S).ok());
    }
    CHECK_THROWS_AS(scale_base(L, Rational(0)), DegenerateBasis);
}
