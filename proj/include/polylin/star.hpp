#pragma once

#include <span>
#include <vector>

#include "polylin/linearization.hpp"

namespace polylin {

/// Targets, all their nonempty intersections, and the singletons {1}..{n}.
struct ClosureFamily {
    int n = 0;
    std::vector<Monomial> members; ///< sorted
};

ClosureFamily intersection_closure(std::span<const Monomial> targets, int n);

/// Covering relation of the family under inclusion, arcs from the larger set.
LinDigraph hasse_digraph(const ClosureFamily& family);

/// L*: every proper member is the AND of its Hasse children.
Linearization build_star(std::span<const Monomial> targets, int n);

} // namespace polylin
