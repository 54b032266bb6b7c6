#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sol/classify.hpp"

#include <random>
#include <set>

using namespace sol;

namespace {

std::mt19937_64 rng(909);

SolLattice translate_offset(const SolLattice& L, long m, long n) {
    FieldContext ctx = L.context();
    QuadNum qm = QuadNum::integer(m, ctx), qn = QuadNum::integer(n, ctx);
    return with_offset(L, L.tau3().x + qm * L.tau1().x + qn * L.tau2().x,
                       L.tau3().y + qm * L.tau1().y + qn * L.tau2().y);
}

// random word in the two shear generators and the rotation
std::array<long, 4> random_unimodular() {
    long m[4] = {1, 0, 0, 1};
    std::uniform_int_distribution<int> pick(0, 2), count(1, 6);
    int len = count(rng);
    for (int i = 0; i < len; ++i) {
        long a = m[0], b = m[1], c = m[2], d = m[3];
        switch (pick(rng)) {
            case 0:  // right-multiply by (1 1; 0 1)
                m[1] = a + b;
                m[3] = c + d;
                break;
            case 1:  // right-multiply by (1 0; 1 1)
                m[0] = a + b;
                m[2] = c + d;
                break;
            case 2:  // right-multiply by (0 1; -1 0)
                m[0] = -b;
                m[1] = a;
                m[2] = -d;
                m[3] = c;
                break;
        }
    }
    return {m[0], m[1], m[2], m[3]};
}

}  // namespace

TEST_CASE("labels round-trip and accept lowercase") {
    for (int i = 0; i < kBravaisCount; ++i) {
        Bravais t = bravais_from_index(i);
        CHECK(bravais_from_string(to_string(t)) == t);
    }
    CHECK(bravais_from_string("ii/9") == Bravais::II9);
    CHECK(bravais_from_string("i/4") == Bravais::I4);
    CHECK_THROWS(bravais_from_string("III/1"));
}

TEST_CASE("pinned classifications") {
    CHECK(classify(canonical_basis(6, 0, 1)) == Bravais::I1);
    RealizeResult r9 = realize_type(6, Bravais::II9);
    REQUIRE(r9.ok());
    CHECK(classify(*r9.lattice) == Bravais::II9);
    Certificate cert = certificate(*r9.lattice);
    bool saw = false;
    for (const auto& rel : cert.relations) {
        if (rel.name == "gammaN_plus_2delta_is_2beta") {
            CHECK(rel.pass);
            saw = true;
        }
    }
    CHECK(saw);
    RealizeResult r13 = realize_type(6, Bravais::II13);
    REQUIRE(r13.ok());
    CHECK(classify(*r13.lattice) == Bravais::II13);
}

TEST_CASE("unrealizable cases carry reasons") {
    RealizeResult r = realize_type(5, Bravais::I3);
    CHECK_FALSE(r.ok());
    CHECK(r.reason.find("even") != std::string::npos);
    CHECK_FALSE(realize_type(4, Bravais::I4).ok());
    CHECK_FALSE(realize_type(5, Bravais::II13).ok());
    CHECK_FALSE(realize_type(2, Bravais::I1).ok());
}

TEST_CASE("realizable sets per trace parameter") {
    auto labels = [](const std::vector<Bravais>& ts) {
        std::set<std::string> out;
        for (Bravais t : ts) out.insert(to_string(t));
        return out;
    };
    CHECK(realizable_types(6).size() == 17);
    std::set<std::string> n3 = labels(realizable_types(3));
    CHECK(n3 ==
          std::set<std::string>{"I/1", "I/2", "I/4", "II/1", "II/2", "II/7", "II/11", "II/13"});
    std::set<std::string> n5 = labels(realizable_types(5));
    // no primitive bases (odd N) and no square q^2 = p(5-p) - 1
    CHECK(n5.count("I/4") == 0);
    CHECK(n5.count("II/13") == 0);
    CHECK(n5.count("I/3") == 0);
    CHECK(n5.count("II/10") == 0);
    CHECK(n5 == std::set<std::string>{"I/1", "I/2", "II/1", "II/2", "II/7", "II/11"});
}

TEST_CASE("soundness: realize then classify is the identity") {
    for (long N = 3; N <= 8; ++N) {
        for (Bravais t : realizable_types(N)) {
            RealizeResult r = realize_type(N, t);
            REQUIRE(r.ok());
            CHECK(classify(*r.lattice) == t);
            CHECK(verify_presentation(*r.lattice).ok());
            CHECK(isotropy_check(*r.lattice).ok);
        }
    }
}

TEST_CASE("classify metadata equals the independent computations") {
    for (long N : {4L, 6L}) {
        for (Bravais t : realizable_types(N)) {
            SolLattice L = *realize_type(N, t).lattice;
            ClassifyReport rep = classify_report(L);
            const BravaisInfo& meta = info(t);
            CHECK(rep.main_case == meta.main_case);
            CHECK(rep.main_case == (offset_in_base(L) ? 1 : 2));
            PointGroup g = rep.group;
            if (g == PointGroup::Drbar) g = PointGroup::Dr;
            CHECK(g == meta.group);
            CHECK(rep.z_sublattice == meta.has_z_sublattice);
            CHECK(rep.z_sublattice == z_sublattice_exists(L));
            if (meta.base) CHECK(rep.base == *meta.base);
            CHECK(rep.base == centering(L));
        }
    }
}

TEST_CASE("classification is invariant under rescaling, rebasing, translation") {
    std::uniform_int_distribution<long> mn(-4, 4);
    const Rational scales[] = {Rational(2), Rational(1, 3), Rational(-1), Rational(-7, 5),
                               Rational(11, 2)};
    for (Bravais t : realizable_types(6)) {
        SolLattice L = *realize_type(6, t).lattice;
        for (const Rational& c : scales) CHECK(classify(scale_base(L, c)) == t);
        for (int i = 0; i < 12; ++i) {
            auto U = random_unimodular();
            CHECK(classify(rebase(L, U[0], U[1], U[2], U[3])) == t);
            CHECK(classify(translate_offset(L, mn(rng), mn(rng))) == t);
        }
    }
}

TEST_CASE("case split follows the offset class") {
    for (Bravais t : realizable_types(6)) {
        SolLattice L = *realize_type(6, t).lattice;
        bool case_one = info(t).main_case == 1;
        CHECK(offset_in_base(L) == case_one);
    }
}

TEST_CASE("vertical-offset lattices never classify as case II and vice versa") {
    SolLattice L = canonical_basis(6, 1, 2);
    CHECK(info(classify(L)).main_case == 1);
    SolLattice M = translate_offset(L, 2, -3);  // still a base vector offset
    CHECK(info(classify(M)).main_case == 1);
}
