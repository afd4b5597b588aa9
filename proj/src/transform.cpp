#include "polylin/transform.hpp"

#include <algorithm>

#include "polylin/error.hpp"

namespace polylin {

Linearization eliminate_monomial(const Linearization& lin, const Monomial& m) {
    require_simple_valid(lin, "eliminate_monomial");
    if (!lin.contains(m)) throw InvalidInput(m.to_string() + " is not a monomial of L");
    if (m.is_singleton()) throw InvalidInput("cannot eliminate the singleton " + m.to_string());

    const AndConstraint* star = lin.constraint_for(m);
    std::vector<AndConstraint> constraints;
    for (const auto& c : lin.constraints()) {
        if (c.resultant == m) continue;
        if (!std::binary_search(c.operands.begin(), c.operands.end(), m)) {
            constraints.push_back(c);
            continue;
        }
        std::vector<Monomial> ops;
        for (const auto& op : c.operands)
            if (op != m) ops.push_back(op);
        ops.insert(ops.end(), star->operands.begin(), star->operands.end());
        constraints.emplace_back(c.resultant, std::move(ops));
    }
    std::vector<Monomial> monomials;
    for (const auto& x : lin.monomials())
        if (x != m) monomials.push_back(x);
    return Linearization(lin.n(), std::move(monomials), std::move(constraints));
}

Linearization preprocess(const Linearization& lin, std::span<const Monomial> targets) {
    require_simple_valid(lin, "preprocess");
    for (const auto& t : targets)
        if (t.is_singleton() || !lin.contains(t))
            throw InvalidInput("target " + t.to_string() + " is not a proper monomial of L");

    // Digraph nodes share the index order of lin.monomials().
    LinDigraph graph(lin);
    std::vector<std::size_t> seeds;
    for (const auto& t : targets) seeds.push_back(graph.require_index(t));
    std::vector<char> keep(graph.node_count(), 0);
    for (auto v : graph.successors(std::span<const std::size_t>(seeds))) keep[v] = 1;

    std::vector<Monomial> monomials;
    for (std::size_t v = 0; v < graph.node_count(); ++v)
        if (keep[v] || graph.node(v).is_singleton()) monomials.push_back(graph.node(v));
    std::vector<AndConstraint> constraints;
    for (const auto& c : lin.constraints())
        if (keep[graph.require_index(c.resultant)]) constraints.push_back(c);
    return Linearization(lin.n(), std::move(monomials), std::move(constraints));
}

} // namespace polylin
