#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polylin/dp_solver.hpp"
#include "polylin/error.hpp"
#include "polylin/lp.hpp"
#include "polylin/oracle.hpp"
#include "polylin/star.hpp"

using namespace polylin;

namespace {

LpRow row(std::vector<std::pair<std::size_t, Rational>> terms, Relation rel, Rational rhs) {
    return LpRow{std::move(terms), rel, std::move(rhs)};
}

Objective per_target(const std::vector<Monomial>& ts, Rational c) {
    Objective a;
    for (const auto& t : ts) a[t] = c;
    return a;
}

} // namespace

TEST_SUITE("lp") {

TEST_CASE("cycling example terminates under Bland's rule") {
    LpProblem p;
    p.num_vars = 4;
    p.objective = {Rational(-3, 4), Rational(20), Rational(-1, 2), Rational(6)};
    p.rows.push_back(row({{0, Rational(1, 4)}, {1, Rational(-8)}, {2, Rational(-1)}, {3, Rational(9)}}, Relation::LessEq, 0));
    p.rows.push_back(row({{0, Rational(1, 2)}, {1, Rational(-12)}, {2, Rational(-1, 2)}, {3, Rational(3)}}, Relation::LessEq, 0));
    p.rows.push_back(row({{2, Rational(1)}}, Relation::LessEq, 1));
    LpResult r = simplex_solve(p);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rational(-5, 4));
}

TEST_CASE("free variables, equalities and maximization") {
    // max x + y, x free, y >= 0, x + 2y = 4, x - y <= 1
    LpProblem p;
    p.num_vars = 2;
    p.sense = Sense::Maximize;
    p.objective = {1, 1};
    p.bounds = {VarBound{std::nullopt, std::nullopt}, VarBound{}};
    p.rows.push_back(row({{0, 1}, {1, 2}}, Relation::Equal, 4));
    p.rows.push_back(row({{0, 1}, {1, -1}}, Relation::LessEq, 1));
    LpResult r = simplex_solve(p);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.x[0] == 2);
    CHECK(r.x[1] == 1);
    CHECK(r.value == 3);

    // min x with x free and x >= -7/2
    LpProblem q;
    q.num_vars = 1;
    q.objective = {1};
    q.bounds = {VarBound{std::nullopt, std::nullopt}};
    q.rows.push_back(row({{0, 2}}, Relation::GreaterEq, -7));
    LpResult s = simplex_solve(q);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == Rational(-7, 2));
}

TEST_CASE("fractional optimum") {
    // max 2x + y s.t. x + y <= 4, x + 3y <= 6, 5x + y <= 12; optimum where the last two meet
    LpProblem p;
    p.num_vars = 2;
    p.sense = Sense::Maximize;
    p.objective = {2, 1};
    p.rows.push_back(row({{0, 1}, {1, 1}}, Relation::LessEq, 4));
    p.rows.push_back(row({{0, 1}, {1, 3}}, Relation::LessEq, 6));
    p.rows.push_back(row({{0, 5}, {1, 1}}, Relation::LessEq, 12));
    LpResult r = simplex_solve(p);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.x[0] == Rational(15, 7));
    CHECK(r.x[1] == Rational(9, 7));
    CHECK(r.value == Rational(39, 7));

    LpProblem f;
    f.num_vars = 2;
    f.sense = Sense::Maximize;
    f.objective = {1, 1};
    f.rows.push_back(row({{0, 2}, {1, 1}}, Relation::LessEq, 4));
    f.rows.push_back(row({{0, 1}, {1, 3}}, Relation::LessEq, 5));
    LpResult g = simplex_solve(f);
    REQUIRE(g.status == LpStatus::Optimal);
    CHECK(g.x[0] == Rational(7, 5));
    CHECK(g.value == Rational(13, 5));
}

TEST_CASE("infeasible and unbounded") {
    LpProblem p;
    p.num_vars = 1;
    p.objective = {1};
    p.bounds = {VarBound{Rational(0), Rational(-1)}};
    CHECK(simplex_solve(p).status == LpStatus::Infeasible);

    LpProblem u;
    u.num_vars = 2;
    u.objective = {-1, 0};
    u.rows.push_back(row({{0, 1}, {1, -1}}, Relation::LessEq, 1));
    CHECK(simplex_solve(u).status == LpStatus::Unbounded);
}

TEST_CASE("iteration budget") {
    LpProblem p;
    p.num_vars = 2;
    p.sense = Sense::Maximize;
    p.objective = {1, 1};
    p.rows.push_back(row({{0, 1}}, Relation::LessEq, 1));
    p.rows.push_back(row({{1, 1}}, Relation::LessEq, 1));
    CHECK_THROWS_AS(simplex_solve(p, 1), GuardExceeded);
}

TEST_CASE("AND semantics on the McCormick system") {
    Linearization lin = standard_linearization(2, {{1, 2}});
    LpProblem p = to_lp(build_system(lin), {{Monomial{1, 2}, Rational(-1)}});
    // Pin both singletons to 1.
    for (int i = 0; i < 2; ++i) p.rows.push_back(row({{static_cast<std::size_t>(*lin.index_of(Monomial::singleton(i + 1))), 1}}, Relation::Equal, 1));
    LpResult r = simplex_solve(p);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == -1);
}

TEST_CASE("non-integral relaxation of the running example") {
    Linearization lin = fixtures::running_example();
    Objective a = {{Monomial{1, 2, 3, 4}, 3}, {Monomial{1}, -1}, {Monomial{2}, -1}, {Monomial{3}, -1}, {Monomial{4}, -1}};
    LpResult lp = optimize_relaxation(lin, a);
    BruteResult brute = brute_force_min(lin, a);
    REQUIRE(lp.status == LpStatus::Optimal);
    CHECK(lp.value == Rational(-11, 3));
    CHECK(brute.value == -3);

    Objective small = {{Monomial{1, 2, 3, 4}, 1}, {Monomial{3}, 1}};
    CHECK(optimize_relaxation(lin, small).value == 0);
    CHECK(optimize_relaxation(lin, {}).value == 0);
}

TEST_CASE("LP agrees with DP on acyclic instances") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 40; ++rep) {
        Linearization lin = fixtures::random_acyclic(rng, 8, 7);
        Objective a = fixtures::random_objective(rng, lin.monomials(), -5, 5);
        LpResult lp = optimize_relaxation(lin, a);
        REQUIRE(lp.status == LpStatus::Optimal);
        CHECK(lp.value == solve_acyclic(lin, a).value);
    }
}

TEST_CASE("L* of the running example is a strict bound for some objective") {
    auto ts = fixtures::running_targets();
    Linearization star = build_star(ts, 6);
    Objective neg = per_target(ts, -1);
    CHECK(optimize_relaxation(star, neg).value <= brute_force_min(6, neg).value);

    std::mt19937_64 rng(32);
    bool strict = false;
    std::vector<Monomial> support = ts;
    for (int i = 1; i <= 6; ++i) support.push_back(Monomial::singleton(i));
    for (int rep = 0; rep < 200 && !strict; ++rep) {
        Objective a = fixtures::random_objective(rng, support, -5, 5);
        Rational lp = optimize_relaxation(star, a).value;
        Rational ip = brute_force_min(6, a).value;
        CHECK(lp <= ip);
        strict = lp < ip;
    }
    CHECK(strict);
}

} // TEST_SUITE
