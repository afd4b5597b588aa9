#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "polylin/error.hpp"
#include "polylin/integrality.hpp"
#include "polylin/relaxation.hpp"

using namespace polylin;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

Assignment singleton_vector(int n, unsigned code) {
    Assignment x;
    for (int i = 1; i <= n; ++i) x[Monomial::singleton(i)] = (code >> (i - 1)) & 1;
    return x;
}

} // namespace

TEST_SUITE("relaxation") {

TEST_CASE("row counts") {
    InequalitySystem mc = build_system(standard_linearization(2, {{1, 2}}));
    CHECK(mc.rows.size() == 6 + 2 + 1);
    const Row& sum = mc.rows.back();
    CHECK(sum.kind == RowKind::Sum);
    CHECK(sum.rhs == 1);

    InequalitySystem sys = build_system(fixtures::running_example());
    CHECK(sys.rows.size() == 62);

    InequalitySystem bare = build_system(Linearization::with_singletons(2, {}, {}));
    CHECK(bare.rows.size() == 4);
    for (const auto& row : bare.rows) CHECK((row.kind == RowKind::LowerBound || row.kind == RowKind::UpperBound));
}

TEST_CASE("row order is bounds, pairs, sums") {
    InequalitySystem sys = build_system(fixtures::running_example());
    int phase = 0;
    for (const auto& row : sys.rows) {
        int p = row.kind == RowKind::Pair ? 1 : row.kind == RowKind::Sum ? 2 : 0;
        CHECK(p >= phase);
        phase = p;
    }
}

TEST_CASE("certificate points satisfy the running example system") {
    Linearization lin = fixtures::running_example();
    InequalitySystem sys = build_system(lin);
    BadCycle six;
    six.nodes = {{1, 2, 3, 4}, {1, 2, 3}, {2, 3}, {3}, {3, 4}, {2, 3, 4}};
    auto c6 = fractional_certificate(lin, fixtures::running_targets(), six);
    CHECK_FALSE(membership(sys, c6.point).has_value());

    BadCycle seven;
    seven.nodes = {{3, 4, 5}, {3, 4}, {4}, {4, 6}, {4, 5, 6}, {5}};
    std::vector<Monomial> t7 = {{3, 4, 5}, {4, 5, 6}};
    auto c7 = fractional_certificate(lin, t7, seven);
    CHECK_FALSE(membership(sys, c7.point).has_value());

    RationalPoint twos;
    for (const auto& m : lin.monomials()) twos[m] = 2;
    auto v = membership(sys, twos);
    REQUIRE(v.has_value());
    CHECK(sys.rows[v->row].kind == RowKind::UpperBound);
    CHECK(v->amount == 1);

    RationalPoint partial;
    partial[{1}] = 0;
    CHECK_THROWS_AS(membership(sys, partial), InvalidInput);
}

TEST_CASE("extended binary vectors are feasible") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 20; ++rep) {
        Linearization lin = fixtures::random_simple(rng, 5, 6);
        InequalitySystem sys = build_system(lin);
        for (unsigned code = 0; code < 32; ++code)
            CHECK_FALSE(membership(sys, extend_assignment(lin, singleton_vector(5, code))).has_value());
    }
}

TEST_CASE("integer points are product-consistent") {
    // Every binary point of the system agrees with the products of its singletons.
    Linearization lin = fixtures::joined_example();
    InequalitySystem sys = build_system(lin);
    const auto& ms = lin.monomials();
    REQUIRE(ms.size() <= 20);
    std::size_t feasible = 0;
    for (unsigned long code = 0; code < (1ul << ms.size()); ++code) {
        Assignment y;
        for (std::size_t v = 0; v < ms.size(); ++v) y[ms[v]] = (code >> v) & 1;
        if (membership(sys, y)) continue;
        ++feasible;
        for (const auto& m : ms) {
            int prod = 1;
            for (int i : m.vars()) prod &= y[Monomial::singleton(i)];
            CHECK(y[m] == prod);
        }
    }
    CHECK(feasible == 64);
}

TEST_CASE("LP export") {
    InequalitySystem mc = build_system(standard_linearization(2, {{1, 2}}));
    std::string text = lp_text(mc, {{Monomial{1, 2}, Rational(-1)}});
    CHECK(text.find("y_1_2") != std::string::npos);
    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
    CHECK(count_lines_with(text, "\n r") == 9);

    std::string sys = lp_text(build_system(fixtures::running_example()), {});
    CHECK(count_lines_with(sys, "\n r") == 62);
    CHECK(sys.find("obj: 0") != std::string::npos);
    CHECK(sys == lp_text(build_system(fixtures::running_example()), {}));

    std::string thirds = lp_text(mc, {{Monomial{1}, Rational(1, 3)}});
    CHECK(thirds.find("scaled") != std::string::npos);
    CHECK(lp_name(Monomial{1, 2}) == "y_1_2");
}

} // TEST_SUITE
