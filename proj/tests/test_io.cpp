#include <doctest.h>

#include "fixtures.hpp"
#include "polylin/error.hpp"
#include "polylin/io.hpp"

using namespace polylin;

TEST_SUITE("io") {

TEST_CASE("linearization round trip") {
    Linearization lin = fixtures::running_example();
    Json j = to_json(lin);
    CHECK(is_linearization_json(j));
    Linearization back = linearization_from_json(j);
    CHECK(back.monomials() == lin.monomials());
    CHECK(back.constraints() == lin.constraints());
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("singletons are implied") {
    Json j = Json::parse(R"({"n": 3, "constraints": [{"resultant": [1, 2], "operands": [[1], [2]]}]})");
    Linearization lin = linearization_from_json(j);
    CHECK(lin.monomials().size() == 4);
    CHECK(validate(lin, true).ok());
}

TEST_CASE("polynomial parsing") {
    Json j = Json::parse(R"({"n": 3, "terms": [
        {"vars": [2, 1], "coef": "1/2"},
        {"vars": [1, 2], "coef": 1},
        {"vars": [3], "coef": "-0.25"}]})");
    PolynomialInstance p = polynomial_from_json(j);
    CHECK(p.n == 3);
    CHECK(p.terms.at({1, 2}) == Rational(3, 2));
    CHECK(p.terms.at({3}) == Rational(-1, 4));
    CHECK(p.targets() == std::vector<Monomial>{{1, 2}});
    CHECK_FALSE(is_linearization_json(j));

    Json out = to_json(p);
    CHECK(polynomial_from_json(out).terms == p.terms);
}

TEST_CASE("bad input") {
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"terms": []})")), InvalidInput);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"n": 2, "terms": [{"vars": [3], "coef": 1}]})")),
                    InvalidInput);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"n": 2, "terms": [{"vars": [1], "coef": 1.5}]})")),
                    InvalidInput);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"n": 0, "terms": []})")), InvalidInput);
    CHECK_THROWS_AS(monomial_from_json(Json::parse(R"([1, "a"])")), InvalidInput);
    CHECK_THROWS_AS(monomial_from_json(Json::parse(R"([1, 1])")), InvalidInput);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("result documents") {
    Assignment y = {{Monomial{1, 2}, 1}, {Monomial{1}, 0}};
    CHECK(to_json(y).dump() == R"({"1":0,"1_2":1})");
    RationalPoint p = {{Monomial{3}, Rational(2, 3)}};
    CHECK(to_json(p).dump() == R"({"3":"2/3"})");

    ValidationReport ok;
    ok.simple = true;
    CHECK(to_json(ok).dump() == R"({"valid":true,"simple":true,"diagnostics":[]})");

    MipVerdict v;
    v.violated = Condition::B;
    v.witness_monomials = {{1, 2}, {2, 3}, {1, 3}};
    Json jv = to_json(v);
    CHECK(jv["holds"] == false);
    CHECK(jv["violated"] == "B");
    CHECK(jv["witness"].size() == 3);
}

} // TEST_SUITE
