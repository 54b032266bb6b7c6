#include "sol/classify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <tuple>

namespace sol {

namespace {

const BravaisInfo kInfos[kBravaisCount] = {
    {"I/1", 1, PointGroup::C2, true, std::nullopt, false},
    {"I/2", 1, PointGroup::D2bar, true, Centering::Centred, false},
    {"I/3", 1, PointGroup::D2bar, true, Centering::Primitive, false},
    {"I/4", 1, PointGroup::C4, true, std::nullopt, false},
    {"II/1", 2, PointGroup::Id, false, std::nullopt, false},
    {"II/2", 2, PointGroup::C2, false, std::nullopt, false},
    {"II/3", 2, PointGroup::Dr, true, Centering::Centred, false},
    {"II/4", 2, PointGroup::D2bar, true, Centering::Primitive, false},
    {"II/5", 2, PointGroup::Dr, false, Centering::Centred, false},
    {"II/6", 2, PointGroup::Dr, false, Centering::Primitive, false},
    {"II/7", 2, PointGroup::Dr, false, Centering::Centred, true},
    {"II/8", 2, PointGroup::Dr, false, Centering::Primitive, true},
    {"II/9", 2, PointGroup::D2bar, false, Centering::Centred, false},
    {"II/10", 2, PointGroup::D2bar, false, Centering::Primitive, false},
    {"II/11", 2, PointGroup::D2bar, false, Centering::Centred, true},
    {"II/12", 2, PointGroup::D2bar, false, Centering::Primitive, true},
    {"II/13", 2, PointGroup::C4, false, std::nullopt, false},
};

}  // namespace

Bravais bravais_from_index(int i) { return static_cast<Bravais>(i); }

const BravaisInfo& info(Bravais t) { return kInfos[static_cast<int>(t)]; }

const std::string& to_string(Bravais t) {
    static const std::string names[kBravaisCount] = {
        "I/1",  "I/2",  "I/3",  "I/4",  "II/1", "II/2", "II/3", "II/4", "II/5",
        "II/6", "II/7", "II/8", "II/9", "II/10", "II/11", "II/12", "II/13"};
    return names[static_cast<int>(t)];
}

Bravais bravais_from_string(const std::string& label) {
    std::string up;
    for (char c : label) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (int i = 0; i < kBravaisCount; ++i)
        if (to_string(static_cast<Bravais>(i)) == up) return static_cast<Bravais>(i);
    throw std::invalid_argument("unknown Bravais type label: " + label);
}

Bravais classify(const SolLattice& L) {
    PointGroup pg = point_group(L);
    bool case_one = offset_in_base(L);

    if (case_one) {
        switch (pg) {
            case PointGroup::C2:
                return Bravais::I1;
            case PointGroup::C4:
                return Bravais::I4;
            case PointGroup::D2bar: {
                Centering c = centering(L);
                if (c == Centering::Centred) return Bravais::I2;
                if (c == Centering::Primitive) return Bravais::I3;
                throw UnclassifiableLattice("reflection symmetry without axis vectors");
            }
            default:
                throw UnclassifiableLattice("vertical-offset lattice must contain the half turn");
        }
    }

    switch (pg) {
        case PointGroup::Id:
            return Bravais::II1;
        case PointGroup::C2:
            return Bravais::II2;
        case PointGroup::C4:
            return Bravais::II13;
        default:
            break;
    }

    bool anti = pg == PointGroup::Drbar;
    bool two_reflections = pg == PointGroup::D2bar;
    Centering c = centering(L);
    if (c == Centering::None)
        throw UnclassifiableLattice("reflection symmetry without axis vectors");

    if (zero_word_reachable(L, anti)) {
        if (c == Centering::Centred) return two_reflections ? Bravais::II11 : Bravais::II7;
        return two_reflections ? Bravais::II12 : Bravais::II8;
    }
    if (z_line_reachable(L, anti)) {
        if (c == Centering::Centred) {
            if (two_reflections)
                throw UnclassifiableLattice(
                    "vertical sublattice with a centred base and both reflections");
            return Bravais::II3;
        }
        if (!two_reflections)
            throw UnclassifiableLattice(
                "vertical sublattice with a primitive base requires both reflections");
        return Bravais::II4;
    }
    if (c == Centering::Centred) return two_reflections ? Bravais::II9 : Bravais::II5;
    return two_reflections ? Bravais::II10 : Bravais::II6;
}

ClassifyReport classify_report(const SolLattice& L) {
    ClassifyReport rep{};
    rep.type = classify(L);
    rep.main_case = info(rep.type).main_case;
    rep.group = point_group(L);
    rep.z_sublattice = z_sublattice_exists(L);
    rep.base = centering(L);
    if (rep.group != PointGroup::Id) rep.cert = certificate(L);
    return rep;
}

namespace {

QuadNum qr(const Rational& r, FieldContext ctx) { return QuadNum::rational(r, ctx); }

SolTranslation vertical(FieldContext ctx) {
    return {QuadNum::integer(0, ctx), QuadNum::integer(0, ctx), 1};
}

SolLattice centred_base(long N) {
    FieldContext ctx(N);
    QuadNum lam = fundamental_unit(ctx);
    QuadNum one = QuadNum::integer(1, ctx);
    return SolLattice::create({lam, one, 0}, {one, lam, 0}, vertical(ctx));
}

// tau1 on the diagonal, tau2 on the antidiagonal; needs even N and q | p^2 - 1.
SolLattice primitive_base(long N, long q) {
    FieldContext ctx(N);
    QuadNum one = QuadNum::integer(1, ctx);
    QuadNum c = QuadNum::root(ctx) / QuadNum::integer(2 * q, ctx);
    return SolLattice::create({one, one, 0}, {-c, c, 0}, vertical(ctx));
}

SolLattice quarter_base(long N, long p, long q) {
    FieldContext ctx(N);
    QuadNum t = (fundamental_unit(ctx) - QuadNum::integer(p, ctx)) / QuadNum::integer(q, ctx);
    QuadNum one = QuadNum::integer(1, ctx);
    return SolLattice::create({t, one, 0}, {-one, t, 0}, vertical(ctx));
}

SolLattice at_coords(const SolLattice& L, const Rational& a, const Rational& b) {
    FieldContext ctx = L.context();
    QuadNum qa = qr(a, ctx), qb = qr(b, ctx);
    return with_offset(L, qa * L.tau1().x + qb * L.tau2().x, qa * L.tau1().y + qb * L.tau2().y);
}

// Divisors of v (v != 0), ascending.
std::vector<long> positive_divisors(long v) {
    if (v < 0) v = -v;
    std::vector<long> out;
    for (long d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            if (d != v / d) out.push_back(v / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool classifies_to(const SolLattice& L, Bravais t) {
    try {
        return classify(L) == t;
    } catch (const LatticeError&) {
        return false;
    }
}

const Rational kOffsetScan[] = {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5),
                                Rational(2, 5), Rational(1, 7), Rational(3, 7), Rational(2, 7),
                                Rational(1, 6), Rational(5, 6), Rational(3, 4), Rational(2, 3)};

RealizeResult realize_case_two_reflection(long N, Bravais target);

}  // namespace

RealizeResult realize_type(long N, Bravais t) {
    if (N < 3) return {std::nullopt, "trace parameter must be at least 3"};
    FieldContext ctx(N);
    QuadNum lam = fundamental_unit(ctx);
    long p_half = N / 2;

    auto done = [&](SolLattice L, Bravais want) -> RealizeResult {
        if (!classifies_to(L, want))
            throw LatticeError("realized lattice failed to classify to " + to_string(want));
        return {std::move(L), ""};
    };

    switch (t) {
        case Bravais::I1:
            return done(canonical_basis(N, 0, 1), t);
        case Bravais::I2:
            return done(centred_base(N), t);
        case Bravais::I3:
            if (N % 2 != 0) return {std::nullopt, "primitive base requires even N"};
            return done(primitive_base(N, 1), t);
        case Bravais::I4:
        case Bravais::II13: {
            for (long p = 0; p <= p_half; ++p) {
                long v = p * (N - p) - 1;
                if (v <= 0) continue;
                long q = static_cast<long>(std::sqrt(static_cast<double>(v)) + 0.5);
                for (long qq : {q - 1, q, q + 1}) {
                    if (qq > 0 && qq * qq == v) {
                        SolLattice base = quarter_base(N, p, qq);
                        if (t == Bravais::I4) return done(base, t);
                        // offset solved from the quarter-turn word = eps*u1 + phi*u2
                        for (auto [eps, ph] : {std::pair<long, long>{1, 0},
                                               {2, 0},
                                               {1, 1},
                                               {0, 1},
                                               {3, 0},
                                               {2, 1},
                                               {1, 2}}) {
                            QuadNum wx = QuadNum::integer(eps, ctx) * base.tau1().x +
                                         QuadNum::integer(ph, ctx) * base.tau2().x;
                            QuadNum wy = QuadNum::integer(eps, ctx) * base.tau1().y +
                                         QuadNum::integer(ph, ctx) * base.tau2().y;
                            QuadNum oy = (wy - lam * wx) / QuadNum::integer(2, ctx);
                            QuadNum ox = wx + oy * lam.conj();
                            SolLattice L = with_offset(base, ox, oy);
                            if (classifies_to(L, t)) return {std::move(L), ""};
                        }
                    }
                }
            }
            return {std::nullopt, "no parameters with q^2 = p(N-p) - 1"};
        }
        case Bravais::II1: {
            SolLattice base = canonical_basis(N, 0, 1);
            for (const Rational& a : {Rational(1, 3), Rational(1, 5), Rational(2, 7)}) {
                for (const Rational& b : {Rational(1, 5), Rational(1, 7), Rational(1, 3)}) {
                    SolLattice L = at_coords(base, a, b);
                    if (classifies_to(L, t)) return {std::move(L), ""};
                }
            }
            return {std::nullopt, "no trivial-symmetry offset found"};
        }
        case Bravais::II2: {
            SolLattice base = canonical_basis(N, 0, 1);
            SolLattice L = at_coords(base, Rational(1, 2), Rational(0));
            return done(std::move(L), t);
        }
        default:
            return realize_case_two_reflection(N, t);
    }
}

namespace {

RealizeResult realize_case_two_reflection(long N, Bravais target) {
    FieldContext ctx(N);
    QuadNum lam = fundamental_unit(ctx);
    const BravaisInfo& meta = info(target);
    bool centred = meta.base == Centering::Centred;

    if (!centred && N % 2 != 0) return {std::nullopt, "primitive base requires even N"};
    if (centred && N % 2 != 0 && !meta.zero_reflection_word && target != Bravais::II3)
        return {std::nullopt,
                "for odd N every reflection-compatible offset admits a vanishing reflection word"};
    if (centred && N % 2 != 0 && target == Bravais::II3)
        return {std::nullopt,
                "for odd N every reflection-compatible offset admits a vanishing reflection word"};

    std::vector<SolLattice> bases;
    if (centred) {
        bases.push_back(centred_base(N));
    } else {
        long p = N / 2;
        for (long q : positive_divisors(p * p - 1)) bases.push_back(primitive_base(N, q));
    }

    for (const SolLattice& base : bases) {
        switch (target) {
            case Bravais::II3: {
                // offsets along the expanding-square eigenline, coords s*(-1, N+1)
                std::vector<Rational> scan = {Rational(1, N + 2), Rational(3, N + 2),
                                              Rational(5, N + 2)};
                scan.insert(scan.end(), std::begin(kOffsetScan), std::end(kOffsetScan));
                for (const Rational& s : scan) {
                    SolLattice L = at_coords(base, -s, s * (N + 1));
                    if (classifies_to(L, target)) return {std::move(L), ""};
                }
                break;
            }
            case Bravais::II4: {
                long p = N / 2;
                LatticeMatrix phin = base.phi();
                long q = phin.q;
                long g = std::gcd(p + 1, q);
                if (g < 2) break;
                for (long mult : {1L, 3L, 5L}) {
                    Rational s(mult, g);
                    SolLattice L = at_coords(base, s * p, s * q);
                    if (classifies_to(L, target)) return {std::move(L), ""};
                }
                break;
            }
            case Bravais::II5:
            case Bravais::II6:
            case Bravais::II9:
            case Bravais::II10: {
                bool dihedral = meta.group == PointGroup::D2bar;
                if (dihedral) {
                    std::vector<std::pair<long, long>> grid;
                    for (long g = -3; g <= 3; ++g)
                        for (long d = -4; d <= 4; ++d)
                            if ((g != 0 || d != 0) && (g * N + 2 * d) % 2 == 0)
                                grid.push_back({g, d});
                    std::sort(grid.begin(), grid.end(), [](auto a, auto b) {
                        auto key = [](std::pair<long, long> v) {
                            return std::tuple(std::abs(v.first) + std::abs(v.second),
                                              -v.first, -v.second);
                        };
                        return key(a) < key(b);
                    });
                    for (auto [g, d] : grid) {
                        SolLattice L = at_coords(base, Rational(g, 2), Rational(d, 2));
                        if (classifies_to(L, target)) return {std::move(L), ""};
                    }
                } else {
                    for (const Rational& a : kOffsetScan) {
                        for (const Rational& b : kOffsetScan) {
                            SolLattice L = at_coords(base, a, b);
                            if (classifies_to(L, target)) return {std::move(L), ""};
                        }
                    }
                }
                break;
            }
            case Bravais::II7:
            case Bravais::II8:
            case Bravais::II11:
            case Bravais::II12: {
                // offsets on the vanishing-word line y = -lambda x
                bool dihedral = meta.group == PointGroup::D2bar;
                std::vector<QuadNum> ts;
                if (dihedral) {
                    QuadNum root = QuadNum::root(ctx);
                    for (long g : {1L, 2L, 3L, 4L}) {
                        if (centred) {
                            // t = g*sqrt(D)/4 makes the half-turn word integral
                            ts.push_back(QuadNum::integer(g, ctx) * root /
                                         QuadNum::integer(4, ctx));
                        } else {
                            // t = g*(1 - lambda^-1)/(2 - N)
                            ts.push_back(QuadNum::integer(g, ctx) *
                                         (QuadNum::integer(1, ctx) - lam.conj()) /
                                         QuadNum::integer(2 - N, ctx));
                        }
                    }
                } else {
                    for (const Rational& r : kOffsetScan) ts.push_back(QuadNum::rational(r, ctx));
                }
                for (const QuadNum& t : ts) {
                    SolLattice L = with_offset(base, t, -t * lam);
                    if (classifies_to(L, target)) return {std::move(L), ""};
                }
                break;
            }
            default:
                return {std::nullopt, "internal: unexpected type in reflection realizer"};
        }
    }
    return {std::nullopt, "no admissible construction found for " + to_string(target) +
                              " at N = " + std::to_string(N)};
}

}  // namespace

std::vector<Bravais> realizable_types(long N) {
    std::vector<Bravais> out;
    for (int i = 0; i < kBravaisCount; ++i) {
        Bravais t = static_cast<Bravais>(i);
        if (realize_type(N, t).ok()) out.push_back(t);
    }
    return out;
}

}  // namespace sol
