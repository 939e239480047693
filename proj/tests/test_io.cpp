#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace fconn;
using namespace testing_support;

TEST_CASE("connection documents") {
    Connection c = parse_connection(R"j({"n": 2, "ramification": 1, "entries": [[1, 2, "z^(-1)"], [2, 1, "1"]]})j");
    CHECK(c == TorusData::make(WeylClass::from_partition({2})).uniformizer_power(0, -1));
    Connection p = parse_connection(R"j({"n": 2, "precision": "3", "entries": [[1, 1, "2*z"]]})j");
    CHECK(p(0, 0).prec() == Q(3));
    CHECK(p(1, 0).prec() == Q(3));
    CHECK(parse_connection(connection_json(p)) == p);
    for (int trial = 0; trial < 20; ++trial) {
        LoopMatrix m = rand_loop(3, -2, 2);
        CHECK(parse_connection(connection_json(m)) == m);
    }
}

TEST_CASE("malformed connection documents") {
    CHECK_THROWS_AS(parse_connection("{"), Error);
    CHECK_THROWS_AS(parse_connection(R"j({"n": 2, "entries": [[3, 1, "1"]]})j"), Error);
    CHECK_THROWS_AS(parse_connection(R"j({"n": 2, "entries": [[1, 1, "z^("]]})j"), Error);
    CHECK_THROWS_AS(parse_connection(R"j({"entries": []})j"), Error);
}

TEST_CASE("formal type documents") {
    FormalType a = parse_formal_type(R"j({"partition": [2], "depth": "1/2", "coefficients": [[1, "-1/2", "1"], [1, "0", "(1 + zeta_3)"]]})j");
    CHECK(a.depth == make_q(1, 2));
    CHECK(a.coeff(0, -1) == Cyc(1L));
    CHECK(a.coeff(0, 0) == Cyc(1L) + Cyc::zeta(3));
    CHECK(parse_formal_type(formal_type_json(a)) == a);
    CHECK_THROWS_AS(parse_formal_type(R"j({"partition": [2], "depth": "1/2", "coefficients": [[1, "-1/3", "1"]]})j"), Error);
    CHECK_THROWS_AS(parse_formal_type(R"j({"partition": [2], "depth": "1/2", "coefficients": [[2, "0", "1"]]})j"), Error);
}

TEST_CASE("cyclotomic literals") {
    CHECK(parse_cyclotomic("zeta_4^2") == Cyc(-1L));
    CHECK(parse_cyclotomic("-1/2 + zeta_3") == Cyc::zeta(3) - Cyc(make_q(1, 2)));
    CHECK_THROWS_AS(parse_cyclotomic("z"), Error);
    for (int trial = 0; trial < 30; ++trial) {
        Cyc c = rand_cyc(static_cast<int>(rand_int(1, 10)));
        CHECK(parse_cyclotomic(c.str()) == c);
    }
}
