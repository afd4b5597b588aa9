#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polylin/linearization.hpp"
#include "polylin/rational.hpp"

namespace polylin {

/// An arc set of D(L) whose undirected version is a simple cycle. nodes are
/// listed in cyclic order; arcs are (resultant, operand) pairs.
struct BadCycle {
    std::vector<Monomial> nodes;
    std::vector<std::pair<Monomial, Monomial>> arcs;
    std::vector<Monomial> upper; ///< out-degree 2 within the cycle
    std::vector<Monomial> lower; ///< in-degree 2 within the cycle
};

struct IntegralityVerdict {
    bool integral = true;
    std::optional<BadCycle> cycle;
};

/// Integrality of the projection of P(L) onto S and T. Linear time apart from
/// witness extraction.
IntegralityVerdict decide_integral(const Linearization& lin, std::span<const Monomial> targets);

/// A bad cycle with as few upper nodes as possible, suitable for
/// fractional_certificate. Throws StructureError on an integral instance and
/// GuardExceeded once more than cycle_budget cycles have been inspected.
BadCycle find_min_upper_cycle(const Linearization& lin, std::span<const Monomial> targets,
                              std::size_t cycle_budget = 10'000);

enum class Construction { PathCount, HalfPoint };

struct FractionalCertificate {
    BadCycle cycle;
    RationalPoint point;
    Construction construction = Construction::PathCount;

    // path-count data
    std::optional<Monomial> s, t, u, l;
    std::map<Monomial, BigInt> path_counts;

    // half-point data
    std::optional<Monomial> u_k;
    std::vector<Monomial> s_nodes; ///< s_i per lower node, cycle order
    std::vector<Monomial> t_nodes; ///< t_i per upper node, cycle order
};

/// Builds the fractional point for a cycle returned by find_min_upper_cycle.
/// Throws StructureError naming the property that fails.
FractionalCertificate fractional_certificate(const Linearization& lin,
                                             std::span<const Monomial> targets,
                                             const BadCycle& cycle);

/// Primal and dual solutions for max w.y + wbar.y_m over a single AND
/// constraint m = AND(1..k).
struct TdiCertificate {
    std::vector<long long> w;
    long long wbar = 0;
    int case_id = 0;
    std::vector<int> primal; ///< operand values
    int primal_resultant = 0;
    std::vector<long long> alpha;
    long long beta = 0;
    std::vector<long long> gamma;
    long long delta = 0;
    long long primal_value = 0;
    long long dual_value = 0;
};

/// Throws InvalidInput when fewer than 2 operand weights are given.
TdiCertificate tdi_single_and(std::span<const long long> w, long long wbar);

} // namespace polylin
