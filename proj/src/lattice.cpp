#include "sol/lattice.hpp"

#include <sstream>

namespace sol {

namespace {

std::string str(const QuadNum& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Integer integer_value(const QuadNum& q) { return Integer(q.a().get_num()); }

}  // namespace

SolLattice SolLattice::create(SolTranslation tau1, SolTranslation tau2, SolTranslation tau3) {
    if (tau1.k != 0 || tau2.k != 0)
        throw DegenerateBasis("base generators must have zero z-component");
    if (tau3.k != 1) throw DegenerateBasis("third generator must have unit z-level");
    BasisMatrix T{tau1.x, tau1.y, tau2.x, tau2.y};
    if (T.det().is_zero()) throw DegenerateBasis("base generators are linearly dependent");
    IsotropyResult iso = isotropy_check(tau1, tau2);
    if (!iso.ok)
        throw IsotropicLattice("isotropic base vector on axis " + iso.axis);
    LatticeMatrix phi = phi_from_basis(T, tau1.context());
    return SolLattice(std::move(tau1), std::move(tau2), std::move(tau3), phi);
}

BaseCoords SolLattice::base_coords(const QuadNum& vx, const QuadNum& vy) const {
    BasisMatrix T = basis();
    QuadNum det = T.det();
    return {(vx * T.t22 - vy * T.t21) / det, (T.t11 * vy - T.t12 * vx) / det};
}

LatticeMatrix phi_from_basis(const BasisMatrix& T, FieldContext ctx) {
    QuadNum det = T.det();
    if (det.is_zero()) throw DegenerateBasis("singular basis matrix");
    QuadNum lam = fundamental_unit(ctx);
    QuadNum lam_inv = lam.conj();
    // (1/det) * T * diag(lambda^-1, lambda) * adj(T)
    QuadNum e11 = (T.t11 * T.t22 * lam_inv - T.t12 * T.t21 * lam) / det;
    QuadNum e12 = (T.t11 * T.t12 * (lam - lam_inv)) / det;
    QuadNum e21 = (T.t21 * T.t22 * (lam_inv - lam)) / det;
    QuadNum e22 = (T.t11 * T.t22 * lam - T.t12 * T.t21 * lam_inv) / det;
    for (const QuadNum* e : {&e11, &e12, &e21, &e22}) {
        if (!e->is_integer())
            throw NotRegular("holonomy entry is not a rational integer: " + str(*e));
    }
    LatticeMatrix phi{integer_value(e11).get_si(), integer_value(e12).get_si(),
                      integer_value(e21).get_si(), integer_value(e22).get_si()};
    if (phi.det() != 1)
        throw NotRegular("holonomy determinant " + std::to_string(phi.det()) + ", expected 1");
    if (phi.trace() != ctx.trace())
        throw NotRegular("holonomy trace " + std::to_string(phi.trace()) + " differs from N");
    return phi;
}

SolLattice canonical_basis(long N, long p, long q, const QuadNum& mu) {
    FieldContext ctx(N);
    if (q <= 0) throw NotALatticeParameter("q must be positive");
    if (p < 0 || 2 * p > N) throw NotALatticeParameter("p must lie in [0, N/2]");
    long prod = p * (N - p) - 1;
    if (prod % q != 0)
        throw NotALatticeParameter("q = " + std::to_string(q) + " does not divide p(N-p)-1 = " +
                                   std::to_string(prod));
    if (mu.is_zero()) throw DegenerateBasis("mu must be nonzero");
    if (!(mu.context() == ctx)) throw ContextMismatch();

    QuadNum root = QuadNum::root(ctx);
    QuadNum n2p = QuadNum::integer(N - 2 * p, ctx);
    QuadNum two_q = QuadNum::integer(2 * q, ctx);
    SolTranslation tau1{QuadNum::integer(1, ctx), mu, 0};
    SolTranslation tau2{(n2p - root) / two_q, mu * (n2p + root) / two_q, 0};
    SolTranslation tau3 = {QuadNum::integer(0, ctx), QuadNum::integer(0, ctx), 1};
    SolLattice L = SolLattice::create(std::move(tau1), std::move(tau2), std::move(tau3));
    LatticeMatrix expect{p, q, prod / q, N - p};
    if (!(L.phi() == expect)) throw NotRegular("derived holonomy disagrees with parameters");
    return L;
}

SolLattice canonical_basis(long N, long p, long q) {
    return canonical_basis(N, p, q, QuadNum::integer(2, FieldContext(N)));
}

std::optional<std::pair<Integer, Integer>> base_membership(const SolTranslation& v,
                                                           const SolLattice& L) {
    if (v.k != 0) return std::nullopt;
    BaseCoords c = L.base_coords(v.x, v.y);
    if (!c.c1.is_integer() || !c.c2.is_integer()) return std::nullopt;
    return std::make_pair(integer_value(c.c1), integer_value(c.c2));
}

std::optional<WordCoordinates> lattice_membership(const SolTranslation& g, const SolLattice& L) {
    // g in Gamma iff g * tau3^{-k} lies in the base lattice.
    SolTranslation w = compose(g, power(L.tau3(), -g.k));
    if (w.k != 0) return std::nullopt;
    auto mn = base_membership(w, L);
    if (!mn) return std::nullopt;
    return WordCoordinates{mn->first, mn->second, g.k};
}

PresentationReport verify_presentation(const SolLattice& L) {
    PresentationReport rep;
    FieldContext ctx = L.context();
    QuadNum lam = fundamental_unit(ctx);
    QuadNum lam_inv = lam.conj();

    SolTranslation comm = commutator(L.tau1(), L.tau2());
    rep.checks.push_back({"base_commutator", comm.is_identity(),
                          comm.is_identity() ? "" : "nonzero commutator " + str(comm.x)});

    auto conj_check = [&](const char* name, const SolTranslation& t, long c1, long c2) {
        SolTranslation lhs = compose(compose(invert(L.tau3()), t), L.tau3());
        QuadNum ex = QuadNum::integer(c1, ctx) * L.tau1().x + QuadNum::integer(c2, ctx) * L.tau2().x;
        QuadNum ey = QuadNum::integer(c1, ctx) * L.tau1().y + QuadNum::integer(c2, ctx) * L.tau2().y;
        bool pass = lhs.k == 0 && lhs.x == ex && lhs.y == ey;
        std::ostringstream det;
        if (!pass) det << "conjugate " << lhs << " differs from combination";
        rep.checks.push_back({name, pass, det.str()});
    };
    conj_check("tau3_conjugates_tau1", L.tau1(), L.phi().p, L.phi().q);
    conj_check("tau3_conjugates_tau2", L.tau2(), L.phi().r, L.phi().s);

    {
        // T^-1 Phi T = diag(lambda^-1, lambda), all in Q(sqrt(D)).
        BasisMatrix T = L.basis();
        QuadNum det = T.det();
        QuadNum p = QuadNum::integer(L.phi().p, ctx), q = QuadNum::integer(L.phi().q, ctx);
        QuadNum r = QuadNum::integer(L.phi().r, ctx), s = QuadNum::integer(L.phi().s, ctx);
        // adj(T) * Phi * T / det
        QuadNum m11 = (T.t22 * (p * T.t11 + q * T.t21) - T.t12 * (r * T.t11 + s * T.t21)) / det;
        QuadNum m12 = (T.t22 * (p * T.t12 + q * T.t22) - T.t12 * (r * T.t12 + s * T.t22)) / det;
        QuadNum m21 = (-T.t21 * (p * T.t11 + q * T.t21) + T.t11 * (r * T.t11 + s * T.t21)) / det;
        QuadNum m22 = (-T.t21 * (p * T.t12 + q * T.t22) + T.t11 * (r * T.t12 + s * T.t22)) / det;
        bool pass = m11 == lam_inv && m22 == lam && m12.is_zero() && m21.is_zero();
        rep.checks.push_back({"eigenvalue_sandwich", pass,
                              pass ? "" : "T^-1 Phi T is not diag(1/lambda, lambda)"});
    }

    {
        QuadNum sum = lam + lam_inv;
        bool pass = sum == QuadNum::integer(ctx.trace(), ctx);
        rep.checks.push_back({"unit_trace", pass, pass ? "" : "lambda + 1/lambda != N"});
    }
    return rep;
}

namespace {

// Nonzero integer kernel of m*u1 + n*u2 = 0 for field scalars u1, u2,
// i.e. an integer point on a rational line; nullopt when only m = n = 0 works.
std::optional<std::pair<Integer, Integer>> axis_kernel(const QuadNum& u1, const QuadNum& u2) {
    if (u1.is_zero() && u2.is_zero()) return std::make_pair(Integer(1), Integer(0));
    if (u1.is_zero()) return std::make_pair(Integer(1), Integer(0));
    if (u2.is_zero()) return std::make_pair(Integer(0), Integer(1));
    QuadNum ratio = u2 / u1;
    if (!ratio.is_rational()) return std::nullopt;
    // m + n*(num/den) = 0 with gcd(num, den) = 1: take (m, n) = (-num, den).
    return std::make_pair(Integer(-ratio.a().get_num()), Integer(ratio.a().get_den()));
}

}  // namespace

IsotropyResult isotropy_check(const SolTranslation& tau1, const SolTranslation& tau2) {
    // A combination proportional to e1 has zero y-component; to e2, zero x.
    if (auto w = axis_kernel(tau1.y, tau2.y)) return {false, "e1", w};
    if (auto w = axis_kernel(tau1.x, tau2.x)) return {false, "e2", w};
    return {true, "", std::nullopt};
}

IsotropyResult isotropy_check(const SolLattice& L) { return isotropy_check(L.tau1(), L.tau2()); }

std::pair<QuadNum, QuadNum> reduce_offset(const std::pair<QuadNum, QuadNum>& v,
                                          const SolLattice& L) {
    FieldContext ctx = L.context();
    BaseCoords c = L.base_coords(v.first, v.second);
    QuadNum f1 = c.c1 - QuadNum::rational(Rational(c.c1.floor()), ctx);
    QuadNum f2 = c.c2 - QuadNum::rational(Rational(c.c2.floor()), ctx);
    return {f1 * L.tau1().x + f2 * L.tau2().x, f1 * L.tau1().y + f2 * L.tau2().y};
}

bool rotated_basis_check(const SolLattice& L) {
    FieldContext ctx = L.context();
    QuadNum lam = fundamental_unit(ctx);
    QuadNum lam_inv = lam.conj();
    QuadNum half = QuadNum::rational(Rational(1, 2), ctx);
    // (1/2) (1 1; -1 1) diag(lambda^-1, lambda) (1 -1; 1 1); the sqrt(2)
    // normalizations of the rotation cancel in the sandwich.
    QuadNum h11 = (lam_inv + lam) * half;
    QuadNum h12 = (lam - lam_inv) * half;
    QuadNum h21 = (lam - lam_inv) * half;
    QuadNum h22 = (lam_inv + lam) * half;
    QuadNum coshv = QuadNum::rational(Rational(ctx.trace(), 2), ctx);
    QuadNum sinhv = QuadNum::root(ctx) * half;
    return h11 == coshv && h22 == coshv && h12 == sinhv && h21 == sinhv;
}

SolLattice rebase(const SolLattice& L, long u, long v, long w, long wbar) {
    long det = u * wbar - v * w;
    if (det != 1 && det != -1) throw DegenerateBasis("rebase matrix is not unimodular");
    FieldContext ctx = L.context();
    auto comb = [&](long a, long b) {
        return SolTranslation{QuadNum::integer(a, ctx) * L.tau1().x + QuadNum::integer(b, ctx) * L.tau2().x,
                              QuadNum::integer(a, ctx) * L.tau1().y + QuadNum::integer(b, ctx) * L.tau2().y,
                              0};
    };
    return SolLattice::create(comb(u, v), comb(w, wbar), L.tau3());
}

SolLattice scale_base(const SolLattice& L, const Rational& c) {
    if (c == 0) throw DegenerateBasis("scale factor must be nonzero");
    QuadNum f = QuadNum::rational(c, L.context());
    auto scale = [&](const SolTranslation& t) {
        return SolTranslation{t.x * f, t.y * f, t.k};
    };
    return SolLattice::create(scale(L.tau1()), scale(L.tau2()), scale(L.tau3()));
}

SolLattice with_offset(const SolLattice& L, const QuadNum& ox, const QuadNum& oy) {
    return SolLattice::create(L.tau1(), L.tau2(), SolTranslation{ox, oy, 1});
}

}  // namespace sol
