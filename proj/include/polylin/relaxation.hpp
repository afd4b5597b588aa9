#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polylin/linearization.hpp"
#include "polylin/rational.hpp"

namespace polylin {

enum class RowKind { LowerBound, UpperBound, Pair, Sum };

struct Term {
    std::size_t var;
    Rational coef;
};

/// sum(terms) <= rhs
struct Row {
    RowKind kind;
    std::vector<Term> terms;
    Rational rhs;
};

/// The relaxation P(L). Rows come in a fixed order: bound rows (-y <= 0 then
/// y <= 1, per monomial), pair rows, then sum rows, each following the
/// lexicographic order of monomials and constraints.
struct InequalitySystem {
    std::vector<Monomial> variables;
    std::vector<Row> rows;

    std::optional<std::size_t> index_of(const Monomial& m) const;
};

InequalitySystem build_system(const Linearization& lin);

struct Violation {
    std::size_t row;
    Rational amount; ///< lhs - rhs, strictly positive
};

/// First violated row, or nullopt when y lies in the polyhedron. Throws
/// InvalidInput if y lacks a coordinate.
std::optional<Violation> membership(const InequalitySystem& sys, const RationalPoint& y);
std::optional<Violation> membership(const InequalitySystem& sys, const Assignment& y);

/// Checks only the rows whose variables all appear in y.
std::optional<Violation> membership_on_support(const InequalitySystem& sys,
                                               const Assignment& y);

/// CPLEX LP text for min obj over sys.
std::string lp_text(const InequalitySystem& sys, const Objective& obj);

/// Writes lp_text to path. Throws Error if the file cannot be written.
void export_lp(const InequalitySystem& sys, const Objective& obj,
               const std::filesystem::path& path);

/// "y_1_2" for {1,2}.
std::string lp_name(const Monomial& m);

} // namespace polylin
