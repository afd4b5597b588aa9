#pragma once

#include <span>
#include <vector>

#include "polylin/linearization.hpp"
#include "polylin/rational.hpp"

namespace polylin {

/// Limits on n for the exponential engines. POLYLIN_GUARD_N, when set,
/// replaces both limits.
struct EnumerationGuard {
    int brute_limit = 24;
    int hull_limit = 16;

    static EnumerationGuard from_env();
    static EnumerationGuard unlimited() { return {64, 64}; }
};

struct BruteResult {
    Rational value;
    std::vector<int> x; ///< x[i-1] for variable i
    Assignment y;       ///< products over the monomials of interest
};

/// Minimizes sum_m a_m prod_{i in m} x_i over x in {0,1}^n. Ties resolve to
/// the lexicographically smallest x. y covers the keys of a.
BruteResult brute_force_min(int n, const Objective& a,
                            const EnumerationGuard& guard = EnumerationGuard::from_env());

/// Same, with y covering all of M. Keys of a must lie in M.
BruteResult brute_force_min(const Linearization& lin, const Objective& a,
                            const EnumerationGuard& guard = EnumerationGuard::from_env());

/// Whether the point (given on the singletons and the targets) is a convex
/// combination of product-consistent binary points.
bool hull_membership(int n, std::span<const Monomial> targets, const RationalPoint& point,
                     const EnumerationGuard& guard = EnumerationGuard::from_env());

} // namespace polylin
