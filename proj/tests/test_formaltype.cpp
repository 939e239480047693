#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace fconn;
using namespace testing_support;

namespace {

TorusData torus(std::vector<int> parts) { return TorusData::make(WeylClass::from_partition(std::move(parts))); }

FormalType coxeter_type(const Cyc& lead, const Cyc& res) {
    FormalType a{torus({2}), make_q(1, 2), {}};
    a.set(0, -1, lead);
    a.set(0, 0, res);
    return a;
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate(coxeter_type(Cyc(1L), Cyc())).valid);
    Validation missing = validate(coxeter_type(Cyc(), Cyc(1L)));
    CHECK_FALSE(missing.valid);
    CHECK_THROWS_AS(realize(coxeter_type(Cyc(), Cyc(1L))), Error);

    FormalType split{TorusData::split(2), Q(0), {}};
    split.set(0, 0, Cyc(make_q(1, 3)));
    CHECK(validate(split).valid);
    split.set(0, 0, Cyc(1L));
    CHECK_FALSE(validate(split).valid);

    // equal leading coefficients on a split torus are not regular
    FormalType eq{TorusData::split(2), Q(1), {}};
    eq.set(0, -1, Cyc(1L));
    eq.set(1, -1, Cyc(1L));
    CHECK_FALSE(validate(eq).valid);

    FormalType third{TorusData::split(2), Q(0), {}};
    third.set(0, 0, Cyc(make_q(1, 2)));
    Validation v = validate(third, parse_point("1/2,0"));
    CHECK(v.valid);
    CHECK(v.hyperplanes == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("twist, uniformizer and swap actions") {
    FormalType a = coxeter_type(Cyc(1L), Cyc(make_q(1, 5)));
    FormalType w = rho_act(RelWeylElt::uniformizer(a.torus, 0), a);
    CHECK(w.coeff(0, -1) == Cyc(1L));
    CHECK(w.coeff(0, 0) == Cyc(make_q(1, 5) - make_q(1, 2)));
    FormalType d = rho_act(RelWeylElt::twist(a.torus, 0), a);
    CHECK(d.coeff(0, -1) == Cyc(-1L));
    CHECK(d.coeff(0, 0) == Cyc(make_q(1, 5)));

    TorusData t22 = torus({2, 2});
    FormalType b{t22, make_q(3, 2), {}};
    b.set(0, -3, Cyc(1L));
    b.set(1, -3, Cyc(2L));
    FormalType s = rho_act(RelWeylElt::swap(t22, 0, 1), b);
    CHECK(s.coeff(0, -3) == Cyc(2L));
    CHECK(s.coeff(1, -3) == Cyc(1L));
    RelWeylElt sw = RelWeylElt::swap(t22, 0, 1);
    CHECK(sw.matrix * sw.matrix == LoopMatrix::identity(4));
}

TEST_CASE("the action is a homomorphism") {
    TorusData t = torus({2, 2});
    FormalType a{t, make_q(3, 2), {}};
    a.set(0, -3, Cyc(1L));
    a.set(1, -3, Cyc(3L));
    a.set(0, -1, Cyc(make_q(1, 2)));
    a.set(1, 0, Cyc(make_q(1, 7)));
    std::vector<RelWeylElt> gens{RelWeylElt::twist(t, 0), RelWeylElt::twist(t, 1), RelWeylElt::uniformizer(t, 0),
                                 RelWeylElt::uniformizer(t, 1, -2), RelWeylElt::swap(t, 0, 1)};
    for (const auto& g : gens)
        for (const auto& h : gens) CHECK(rho_act(g * h, a) == rho_act(g, rho_act(h, a)));
}

TEST_CASE("orbit equivalence finds words") {
    FormalType a = coxeter_type(Cyc(1L), Cyc(make_q(1, 5)));
    auto id = orbit_equivalent(a, a);
    REQUIRE(id);
    CHECK(id->str(a.torus) == "identity");
    RelWeylElt n = RelWeylElt::uniformizer(a.torus, 0, 3) * RelWeylElt::twist(a.torus, 0);
    FormalType b = rho_act(n, a);
    auto w = orbit_equivalent(a, b);
    REQUIRE(w);
    CHECK(rho_act(*w, a) == b);
    CHECK_FALSE(orbit_equivalent(a, coxeter_type(Cyc(2L), Cyc(make_q(1, 5)))));
    CHECK_FALSE(orbit_equivalent(a, coxeter_type(Cyc(1L), Cyc(make_q(1, 3)))));
}

TEST_CASE("words print and parse") {
    TorusData t = torus({2, 2});
    RelWeylElt w = RelWeylElt::uniformizer(t, 0, -1) * RelWeylElt::twist(t, 1) * RelWeylElt::swap(t, 0, 1);
    CHECK(w.str(t) == "w1^-1 d2 s1,2");
    RelWeylElt back = parse_word(t, w.str(t));
    CHECK(back.matrix == w.matrix);
    CHECK(parse_word(t, "identity").word.empty());
    CHECK_THROWS_AS(parse_word(t, "q1"), Error);
    TorusData c = torus({3});
    CHECK(parse_word(c, "w^2 d").str(c) == "w^2 d");
}

TEST_CASE("matrix round trip through the torus projection") {
    FormalType a = coxeter_type(Cyc(3L), Cyc(make_q(-1, 4)));
    CHECK(FormalType::from_s_matrix(a.torus, a.depth, a.matrix()) == a);
    CHECK(a.at_grade(0, make_q(-1, 2)) == Cyc(3L));
    CHECK(a.at_grade(0, make_q(-1, 3)).is_zero());
}
