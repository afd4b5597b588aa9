#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "polylin/linearization.hpp"
#include "polylin/rational.hpp"

namespace polylin {

/// Rooting of each tree component of G(D(L)). Components without a proper
/// monomial (isolated singletons) have no root and no entries.
struct TreeDecoration {
    std::vector<Monomial> roots;
    std::map<Monomial, Monomial> alpha; ///< neighbour towards the root
    std::set<Monomial> up;              ///< arc alpha(m) -> m
    std::set<Monomial> down;            ///< arc m -> alpha(m)
    std::map<Monomial, std::size_t> depth;
};

/// Throws StructureError when G(D(L)) has a cycle.
TreeDecoration tree_decoration(const Linearization& lin);

/// Every table the DP produced, as a partial assignment. Down tables include
/// their extension coordinate alpha(m).
struct DpTrace {
    std::vector<std::pair<Monomial, Assignment>> tables;
};

struct DpResult {
    Rational value;
    Assignment y;
};

/// min a(y) over the integer points of P(L) for simple, valid L whose
/// undirected digraph is a forest. Keys of a must lie in M.
DpResult solve_acyclic(const Linearization& lin, const Objective& a, DpTrace* trace = nullptr);

} // namespace polylin
