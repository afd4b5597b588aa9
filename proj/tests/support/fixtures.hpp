#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polylin/linearization.hpp"

namespace fixtures {

using polylin::Linearization;
using polylin::Monomial;

/// Running example with top node {1,2,3,4,5}.
Linearization running_example();
std::vector<Monomial> running_targets();
Monomial running_top();

/// Two linearizations that differ in integrality of the projection.
Linearization split_example();
std::vector<Monomial> split_targets();
Linearization joined_example();
std::vector<Monomial> joined_targets();

/// Every family of 1..max_size distinct subsets of [n] with at least two
/// elements, in lexicographic order of index tuples.
std::vector<std::vector<Monomial>> all_families(int n, int max_size);

/// Random target family over [n] with up to max_targets members.
std::vector<Monomial> random_family(std::mt19937_64& rng, int n, int max_targets);

/// Random simple linearization whose undirected digraph is a forest: each
/// constraint combines monomials taken from distinct tree components.
Linearization random_acyclic(std::mt19937_64& rng, int n, int max_constraints);

/// Random simple linearization, cycles allowed.
Linearization random_simple(std::mt19937_64& rng, int n, int constraints);

/// Uniform integer objective in [lo, hi] on the given monomials.
polylin::Objective random_objective(std::mt19937_64& rng, const std::vector<Monomial>& support,
                                    int lo, int hi);

/// Chain instance: targets {i, i+1} for i = 1..n-1, standard linearization.
Linearization chain(int n);

} // namespace fixtures
