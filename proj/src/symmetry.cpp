#include "sol/symmetry.hpp"

#include <sstream>

namespace sol {

namespace {

std::string str(const QuadNum& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Any integer solution of { a m + b n = c, d m + e n = f } with rational
// coefficients, or nullopt.
std::optional<std::pair<Integer, Integer>> solve_integer_2x2(const Rational& a, const Rational& b,
                                                             const Rational& c, const Rational& d,
                                                             const Rational& e, const Rational& f) {
    auto clear_row = [](const Rational& x, const Rational& y, const Rational& z, Integer out[3]) {
        Integer l = lcm(lcm(x.get_den(), y.get_den()), z.get_den());
        out[0] = x.get_num() * (l / x.get_den());
        out[1] = y.get_num() * (l / y.get_den());
        out[2] = z.get_num() * (l / z.get_den());
    };
    Integer r1[3], r2[3];
    clear_row(a, b, c, r1);
    clear_row(d, e, f, r2);

    auto solve_single = [](const Integer row[3]) -> std::optional<std::pair<Integer, Integer>> {
        if (row[0] == 0 && row[1] == 0)
            return row[2] == 0 ? std::make_optional(std::make_pair(Integer(0), Integer(0)))
                               : std::nullopt;
        Integer g, mg, ng;
        mpz_gcdext(g.get_mpz_t(), mg.get_mpz_t(), ng.get_mpz_t(), row[0].get_mpz_t(),
                   row[1].get_mpz_t());
        if (!mpz_divisible_p(row[2].get_mpz_t(), g.get_mpz_t())) return std::nullopt;
        Integer t = row[2] / g;
        return std::make_pair(Integer(mg * t), Integer(ng * t));
    };

    Integer det = r1[0] * r2[1] - r1[1] * r2[0];
    if (det != 0) {
        Integer mn = r1[2] * r2[1] - r1[1] * r2[2];
        Integer nn = r1[0] * r2[2] - r1[2] * r2[0];
        if (!mpz_divisible_p(mn.get_mpz_t(), det.get_mpz_t()) ||
            !mpz_divisible_p(nn.get_mpz_t(), det.get_mpz_t()))
            return std::nullopt;
        return std::make_pair(Integer(mn / det), Integer(nn / det));
    }
    if (r1[0] == 0 && r1[1] == 0) {
        if (r1[2] != 0) return std::nullopt;
        return solve_single(r2);
    }
    if (r2[0] == 0 && r2[1] == 0) {
        if (r2[2] != 0) return std::nullopt;
        return solve_single(r1);
    }
    // Proportional left-hand sides: consistent iff cross products match.
    if (r1[0] * r2[2] != r2[0] * r1[2] || r1[1] * r2[2] != r2[1] * r1[2]) return std::nullopt;
    return solve_single(r1);
}

// Does some base-lattice translate of the offset lie on the line y = c*x?
bool line_reachable(const SolLattice& L, const QuadNum& c) {
    auto F = [&](const QuadNum& px, const QuadNum& py) { return c * px - py; };
    QuadNum f0 = F(L.tau3().x, L.tau3().y);
    QuadNum f1 = F(L.tau1().x, L.tau1().y);
    QuadNum f2 = F(L.tau2().x, L.tau2().y);
    return solve_integer_2x2(f1.a(), f2.a(), -f0.a(), f1.b(), f2.b(), -f0.b()).has_value();
}

// Nonzero coprime integer kernel of m*u1 + n*u2 = 0.
std::optional<std::pair<Integer, Integer>> diag_kernel(const QuadNum& u1, const QuadNum& u2) {
    if (u1.is_zero()) return std::make_pair(Integer(1), Integer(0));
    if (u2.is_zero()) return std::make_pair(Integer(0), Integer(1));
    QuadNum ratio = u2 / u1;
    if (!ratio.is_rational()) return std::nullopt;
    return std::make_pair(Integer(-ratio.a().get_num()), Integer(ratio.a().get_den()));
}

SolTranslation combination(const SolLattice& L, const Integer& m, const Integer& n) {
    FieldContext ctx = L.context();
    QuadNum qm{Rational(m), 0, ctx}, qn{Rational(n), 0, ctx};
    return {qm * L.tau1().x + qn * L.tau2().x, qm * L.tau1().y + qn * L.tau2().y, 0};
}

// Conjugates all generators by the quarter turn, exchanging the roles of
// the two diagonal reflections.
SolLattice mirror_to_diag(const SolLattice& L) {
    return SolLattice::create(conjugate_by(PointIsometry::QuarterTurn, L.tau1()),
                              conjugate_by(PointIsometry::QuarterTurn, L.tau2()),
                              conjugate_by(PointIsometry::QuarterTurn, L.tau3()));
}

}  // namespace

const std::string& to_string(PointGroup g) {
    static const std::string names[] = {"Id", "C2", "Dr", "Drbar", "D2bar", "C4"};
    return names[static_cast<int>(g)];
}

const std::string& to_string(Centering c) {
    static const std::string names[] = {"centred", "primitive", "none"};
    return names[static_cast<int>(c)];
}

const std::string& to_string(CertificateKind k) {
    static const std::string names[] = {"centred_dr", "primitive_dr", "centred_c2",
                                        "primitive_c2", "c4"};
    return names[static_cast<int>(k)];
}

bool is_symmetry(PointIsometry g, const SolLattice& L) {
    if (g == PointIsometry::Identity) return true;
    if (!base_membership(conjugate_by(g, L.tau1()), L)) return false;
    if (!base_membership(conjugate_by(g, L.tau2()), L)) return false;
    return lattice_membership(conjugate_by(g, L.tau3()), L).has_value();
}

PointGroup point_group(const SolLattice& L) {
    if (is_symmetry(PointIsometry::MirrorX, L) || is_symmetry(PointIsometry::MirrorY, L))
        throw LatticeError("axis reflection symmetry contradicts the isotropy exclusion");
    bool half = is_symmetry(PointIsometry::HalfTurn, L);
    bool quarter = is_symmetry(PointIsometry::QuarterTurn, L);
    bool diag = is_symmetry(PointIsometry::DiagFlip, L);
    bool anti = is_symmetry(PointIsometry::AntiDiagFlip, L);
    if (quarter) {
        if (!half || !is_symmetry(PointIsometry::QuarterTurnInv, L))
            throw LatticeError("quarter turn without its closure");
        if (diag || anti) throw LatticeError("full dihedral point group is impossible");
        return PointGroup::C4;
    }
    if (diag && anti) {
        if (!half) throw LatticeError("both reflections require the half turn");
        return PointGroup::D2bar;
    }
    if (diag) {
        if (half) throw LatticeError("reflection with half turn must close to the full pair");
        return PointGroup::Dr;
    }
    if (anti) {
        if (half) throw LatticeError("reflection with half turn must close to the full pair");
        return PointGroup::Drbar;
    }
    return half ? PointGroup::C2 : PointGroup::Id;
}

bool offset_in_base(const SolLattice& L) {
    return base_membership(SolTranslation{L.tau3().x, L.tau3().y, 0}, L).has_value();
}

bool zero_word_reachable(const SolLattice& L, bool with_antidiag) {
    FieldContext ctx = L.context();
    QuadNum lam = fundamental_unit(ctx);
    return line_reachable(L, with_antidiag ? lam : -lam);
}

bool z_line_reachable(const SolLattice& L, bool with_antidiag) {
    FieldContext ctx = L.context();
    QuadNum lam2 = unit_power(ctx, 2);
    return line_reachable(L, with_antidiag ? -lam2 : lam2);
}

bool z_sublattice_exists(const SolLattice& L) {
    if (offset_in_base(L)) return true;
    switch (point_group(L)) {
        case PointGroup::Dr:
        case PointGroup::D2bar:
            return !zero_word_reachable(L, false) && z_line_reachable(L, false);
        case PointGroup::Drbar:
            return !zero_word_reachable(L, true) && z_line_reachable(L, true);
        default:
            return false;
    }
}

std::optional<AxisVectors> axis_vectors(const SolLattice& L) {
    auto kd = diag_kernel(L.tau1().y - L.tau1().x, L.tau2().y - L.tau2().x);
    if (!kd) return std::nullopt;
    auto ka = diag_kernel(L.tau1().y + L.tau1().x, L.tau2().y + L.tau2().x);
    if (!ka) return std::nullopt;
    AxisVectors out{*kd, *ka, Integer()};
    out.index = abs(kd->first * ka->second - kd->second * ka->first);
    return out;
}

Centering centering(const SolLattice& L) {
    auto ax = axis_vectors(L);
    if (!ax) return Centering::None;
    if (ax->index == 1) return Centering::Primitive;
    if (ax->index == 2) return Centering::Centred;
    return Centering::None;
}

std::optional<std::pair<SolTranslation, SolTranslation>> primitive_normal_basis(
    const SolLattice& L) {
    auto ax = axis_vectors(L);
    if (!ax || ax->index != 1) return std::nullopt;
    SolTranslation vr = combination(L, ax->on_diag.first, ax->on_diag.second);
    SolTranslation va = combination(L, ax->on_antidiag.first, ax->on_antidiag.second);
    if (vr.x.sign() == Sign::Negative) vr = SolTranslation{-vr.x, -vr.y, 0};
    if (va.y.sign() == Sign::Negative) va = SolTranslation{-va.x, -va.y, 0};
    return std::make_pair(std::move(vr), std::move(va));
}

std::optional<std::pair<SolTranslation, SolTranslation>> centred_normal_basis(const SolLattice& L) {
    auto ax = axis_vectors(L);
    if (!ax || ax->index != 2) return std::nullopt;
    SolTranslation vr = combination(L, ax->on_diag.first, ax->on_diag.second);
    SolTranslation va = combination(L, ax->on_antidiag.first, ax->on_antidiag.second);
    FieldContext ctx = L.context();
    QuadNum half = QuadNum::rational(Rational(1, 2), ctx);
    SolTranslation u{(vr.x + va.x) * half, (vr.y + va.y) * half, 0};
    for (int flip = 0; flip < 4; ++flip) {
        SolTranslation cand = u;
        if (flip & 1) cand = SolTranslation{-cand.x, -cand.y, 0};
        if (flip & 2) cand = conjugate_by(PointIsometry::DiagFlip, cand);
        if (cand.x.sign() == Sign::Positive && cand.y.sign() == Sign::Positive &&
            cand.x > cand.y) {
            if (!base_membership(cand, L))
                throw LatticeError("centred half-sum escaped the base lattice");
            return std::make_pair(cand, conjugate_by(PointIsometry::DiagFlip, cand));
        }
    }
    return std::nullopt;
}

std::optional<std::pair<SolTranslation, SolTranslation>> quarter_normal_basis(const SolLattice& L) {
    static const std::pair<long, long> candidates[] = {{1, 0},  {0, 1},  {1, 1},  {1, -1},
                                                       {-1, 1}, {2, 1},  {1, 2},  {2, -1},
                                                       {-2, 1}, {3, 1},  {1, 3},  {3, 2}};
    for (auto [a, b] : candidates) {
        SolTranslation u = combination(L, Integer(a), Integer(b));
        SolTranslation v = conjugate_by(PointIsometry::QuarterTurn, u);
        auto c = base_membership(v, L);
        if (!c) return std::nullopt;  // lattice is not quarter-turn invariant
        Integer idx = abs(Integer(a) * c->second - Integer(b) * c->first);
        if (idx == 1) return std::make_pair(std::move(u), std::move(v));
    }
    return std::nullopt;
}

namespace {

struct SolvedPair {
    QuadNum c1, c2;
    bool integral;
};

SolvedPair coords_in(const SolLattice& L, const SolTranslation& b1, const SolTranslation& b2,
                     const QuadNum& vx, const QuadNum& vy) {
    QuadNum det = b1.x * b2.y - b1.y * b2.x;
    QuadNum c1 = (vx * b2.y - vy * b2.x) / det;
    QuadNum c2 = (b1.x * vy - b1.y * vx) / det;
    (void)L;
    bool integral = c1.is_integer() && c2.is_integer();
    return {std::move(c1), std::move(c2), integral};
}

void record_value(Certificate& cert, const std::string& name, const QuadNum& v) {
    cert.values.emplace(name, v);
    if (v.is_integer()) cert.integers.emplace(name, Integer(v.a().get_num()));
}

}  // namespace

Certificate certificate(const SolLattice& L) {
    PointGroup pg = point_group(L);
    if (pg == PointGroup::Id)
        throw CertificateNotApplicable("trivial point group carries no integrality data");
    if (pg == PointGroup::Drbar) {
        Certificate cert = certificate(mirror_to_diag(L));
        return cert;
    }

    FieldContext ctx = L.context();
    const SolTranslation& tau3 = L.tau3();
    SolTranslation word_half =
        compose(invert(conjugate_by(PointIsometry::HalfTurn, tau3)), tau3);  // (2x, 2y, 0)

    Certificate cert{};
    if (pg == PointGroup::C4) {
        auto nb = quarter_normal_basis(L);
        if (!nb) throw LatticeError("no quarter-turn basis despite C4 point group");
        LatticeMatrix phin = phi_from_basis({nb->first.x, nb->first.y, nb->second.x, nb->second.y},
                                            ctx);
        SolTranslation word = compose(conjugate_by(PointIsometry::QuarterTurn, tau3), tau3);
        SolvedPair ef = coords_in(L, nb->first, nb->second, word.x, word.y);
        SolvedPair pc = coords_in(L, nb->first, nb->second, word_half.x, word_half.y);
        cert.kind = CertificateKind::C4;
        record_value(cert, "epsilon", ef.c1);
        record_value(cert, "phi", ef.c2);
        record_value(cert, "psi", pc.c1);
        record_value(cert, "chi", pc.c2);
        record_value(cert, "ybar", tau3.x / nb->first.y);
        bool rel = phin.q * phin.q + 1 == phin.p * (ctx.trace() - phin.p);
        cert.relations.push_back({"square_q_condition", rel, rel ? "" : "q^2 + 1 != p(N-p)"});
        return cert;
    }

    SolTranslation word_diag = compose(conjugate_by(PointIsometry::DiagFlip, tau3), tau3);
    Centering c = centering(L);
    if (c == Centering::Centred) {
        auto nb = centred_normal_basis(L);
        if (!nb) throw LatticeError("centred base without a reflection-adapted basis");
        SolvedPair ab = coords_in(L, nb->first, nb->second, word_diag.x, word_diag.y);
        SolvedPair gd = coords_in(L, nb->first, nb->second, word_half.x, word_half.y);
        cert.kind = pg == PointGroup::C2 ? CertificateKind::CentredC2 : CertificateKind::CentredDr;
        record_value(cert, "alpha", ab.c1);
        record_value(cert, "beta", ab.c2);
        record_value(cert, "gamma", gd.c1);
        record_value(cert, "delta", gd.c2);
        bool alpha_zero = ab.c1.is_zero();
        cert.relations.push_back({"alpha_vanishes", alpha_zero, alpha_zero ? "" : str(ab.c1)});
        if (ab.integral && gd.integral) {
            Integer lhs = Integer(gd.c1.a().get_num()) * ctx.trace() +
                          2 * Integer(gd.c2.a().get_num());
            Integer rhs = 2 * Integer(ab.c2.a().get_num());
            cert.relations.push_back({"gammaN_plus_2delta_is_2beta", lhs == rhs,
                                      lhs == rhs ? "" : "linear relation fails"});
        }
        bool zero_word = word_diag.is_identity();
        cert.relations.push_back({"reflection_word_vanishes", zero_word, ""});
        if (zero_word) {
            QuadNum ybar = tau3.x / nb->first.y;
            record_value(cert, "ybar", ybar);
            // ybar = delta_ybar * sqrt(D) / (2N), the tabulated form.
            QuadNum dly = ybar * QuadNum::integer(2 * ctx.trace(), ctx) / QuadNum::root(ctx);
            record_value(cert, "delta_ybar", dly);
        }
        return cert;
    }
    if (c == Centering::Primitive) {
        auto nb = primitive_normal_basis(L);
        if (!nb) throw LatticeError("primitive base without axis vectors");
        LatticeMatrix phin = phi_from_basis({nb->first.x, nb->first.y, nb->second.x, nb->second.y},
                                            ctx);
        SolvedPair ab = coords_in(L, nb->first, nb->second, word_diag.x, word_diag.y);
        SolvedPair gd = coords_in(L, nb->first, nb->second, word_half.x, word_half.y);
        cert.kind =
            pg == PointGroup::C2 ? CertificateKind::PrimitiveC2 : CertificateKind::PrimitiveDr;
        record_value(cert, "alpha_bar", ab.c1);
        record_value(cert, "beta_bar", ab.c2);
        record_value(cert, "gamma_bar", gd.c1);
        record_value(cert, "delta_bar", gd.c2);
        if (ab.integral) {
            Integer a = Integer(ab.c1.a().get_num()), b = Integer(ab.c2.a().get_num());
            bool rel = a * phin.q == b * (phin.p + 1);
            cert.relations.push_back(
                {"alpha_over_p1_is_beta_over_q", rel, rel ? "" : "ratio relation fails"});
        }
        if (ab.integral && gd.integral) {
            Integer g = Integer(gd.c1.a().get_num()), d = Integer(gd.c2.a().get_num());
            Integer b = Integer(ab.c2.a().get_num());
            bool rel = g * phin.q - d * (phin.p - 1) == 2 * b;
            cert.relations.push_back(
                {"gamma_q_minus_delta_p1", rel, rel ? "" : "linear relation fails"});
        }
        bool zero_word = word_diag.is_identity();
        cert.relations.push_back({"reflection_word_vanishes", zero_word, ""});
        if (zero_word) {
            record_value(cert, "ybar", tau3.x / nb->first.x);
            if (gd.integral) {
                Integer g = Integer(gd.c1.a().get_num()), d = Integer(gd.c2.a().get_num());
                bool rel = g * phin.q == d * (phin.p - 1);
                cert.relations.push_back(
                    {"gamma_delta_axis_ratio", rel, rel ? "" : "axis ratio fails"});
            }
        }
        return cert;
    }
    if (pg != PointGroup::C2)
        throw LatticeError("reflection-symmetric lattice without axis vectors");
    // C2 with no diagonal structure: report the half-turn word in the stored basis.
    SolvedPair gd = coords_in(L, L.tau1(), L.tau2(), word_half.x, word_half.y);
    cert.kind = CertificateKind::PrimitiveC2;
    record_value(cert, "gamma", gd.c1);
    record_value(cert, "delta", gd.c2);
    return cert;
}

}  // namespace sol
