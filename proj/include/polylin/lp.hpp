#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polylin/rational.hpp"
#include "polylin/relaxation.hpp"

namespace polylin {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEq, Equal, GreaterEq };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpRow {
    std::vector<std::pair<std::size_t, Rational>> terms;
    Relation relation = Relation::LessEq;
    Rational rhs;
};

/// A missing lower bound means the variable is free below.
struct VarBound {
    std::optional<Rational> lower = Rational(0);
    std::optional<Rational> upper;
};

struct LpProblem {
    std::size_t num_vars = 0;
    Sense sense = Sense::Minimize;
    std::vector<Rational> objective; ///< size num_vars
    std::vector<LpRow> rows;
    std::vector<VarBound> bounds;    ///< empty means x >= 0 for every variable
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;
    Rational value;
    std::size_t iterations = 0;
};

/// Dense two-phase primal simplex over exact rationals, Bland's rule. An
/// optimal point is re-checked against every row and bound before it is
/// returned. Throws InvalidInput on a dimension mismatch and GuardExceeded
/// when the pivot budget runs out.
LpResult simplex_solve(const LpProblem& problem,
                       std::size_t iteration_budget = 1'000'000);

/// Minimization of obj over sys. Rows -y <= 0 become lower bounds; variable
/// order follows sys.variables.
LpProblem to_lp(const InequalitySystem& sys, const Objective& obj);

/// min a(y) over P(L).
LpResult optimize_relaxation(const Linearization& lin, const Objective& a);

} // namespace polylin
