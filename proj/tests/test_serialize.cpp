#include <doctest.h>

#include "ctidlab/serialize.hpp"

using namespace ctidlab;

TEST_CASE("QPoly JSON round trip") {
    QPoly p = QPoly::from_coeffs({1, -1});
    json j = to_json(p);
    CHECK(j.dump() == "[\"1\",\"-1\"]");
    CHECK(qpoly_from_json(j) == p);
    CHECK(qpoly_from_json(json::parse("[1, -1]")) == p);
    CHECK(to_json(QPoly()).dump() == "[]");
}

TEST_CASE("BigRat JSON") {
    CHECK(to_json(BigRat(60)).dump() == "\"60\"");
    CHECK(to_json(BigRat(-3, 2)).dump() == "\"-3/2\"");
    CHECK(bigrat_from_json(json("7/2")) == BigRat(7, 2));
    CHECK(bigrat_from_json(json(-4)) == BigRat(-4));
}

TEST_CASE("LaurentPoly serialization is lexicographically sorted") {
    LaurentPoly<BigRat> p(2);
    ExpVec a(2), b(2);
    a.set(0, 1);
    a.set(1, -1);
    b.set(0, -1);
    b.set(1, 1);
    p.add_term(a, BigRat(3));
    p.add_term(b, BigRat(-2));
    p.add_term(ExpVec(2), BigRat(1));
    json j = to_json(p);
    CHECK(j["nvars"] == 2);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["exponents"] == json::array({-1, 1}));
    CHECK(j["terms"][1]["exponents"] == json::array({0, 0}));
    CHECK(j["terms"][2]["exponents"] == json::array({1, -1}));
    CHECK(j["terms"][2]["coeff"] == "3");
}

TEST_CASE("ParamMatrix JSON round trip") {
    ParamMatrix B;
    B.n = 2;
    B.beta = {{0, 1, 2}, {3, 0, 4}, {5, 6, 0}};
    ParamMatrix B2 = param_matrix_from_json(to_json(B));
    CHECK(B == B2);
    CHECK_THROWS_AS(param_matrix_from_json(json::parse("{\"beta\": [[1]]}")), BadParams);
}

TEST_CASE("IdentityCase JSON round trip") {
    json j = json::parse(R"({"family":"q_dyson","params":{"a":[1,2]},"method":"both"})");
    IdentityCase c = identity_case_from_json(j);
    CHECK(c.family == Family::q_dyson);
    CHECK(c.params.avec == std::vector<int>{1, 2});
    CHECK(identity_case_from_json(to_json(c)).params.avec == c.params.avec);

    json j2 = json::parse(
        R"({"family":"aomoto_forrester","params":{"n":2,"n0":1,"m":1,"a":1,"b":1,"k":1},"method":"brute"})");
    IdentityCase c2 = identity_case_from_json(j2);
    CHECK(c2.params.n0 == 1);
    CHECK(c2.method == Method::brute);

    CHECK_THROWS_AS(identity_case_from_json(json::parse(R"({"family":"zzz"})")), BadParams);
}

TEST_CASE("VerifyReport JSON is byte-deterministic") {
    IdentityCase c = identity_case_from_json(
        json::parse(R"({"family":"q_dyson","params":{"a":[1,1]},"method":"both"})"));
    VerifyReport r1 = verify(c);
    VerifyReport r2 = verify(c);
    json j1 = to_json(r1), j2 = to_json(r2);
    j1.erase("elapsed_ms");
    j2.erase("elapsed_ms");
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["lhs"] == json::array({"1", "1"}));
    CHECK(j1["equal"] == true);
}

TEST_CASE("SumsetInstance JSON round trip") {
    json j = json::parse(R"({"p":7,"A":[[0,1,2],[0,1,2]],"S":{"1,2":[0]}})");
    SumsetInstance inst = sumset_instance_from_json(j);
    CHECK(inst.p == 7);
    CHECK(inst.S.at({1, 2}) == std::vector<long>{0});
    json j2 = to_json(inst);
    SumsetInstance inst2 = sumset_instance_from_json(j2);
    CHECK(inst2.A == inst.A);
    CHECK(inst2.S == inst.S);
}
