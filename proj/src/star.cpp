#include "polylin/star.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "polylin/error.hpp"

namespace polylin {

ClosureFamily intersection_closure(std::span<const Monomial> targets, int n) {
    if (n < 1) throw InvalidInput("n must be positive");
    std::set<Monomial> family;
    std::deque<Monomial> fresh;
    for (const auto& t : targets) {
        if (t.max_index() > n) throw InvalidInput("target " + t.to_string() + " exceeds n");
        if (family.insert(t).second) fresh.push_back(t);
    }
    // Each new member is intersected with everything already present.
    std::vector<Monomial> seen;
    while (!fresh.empty()) {
        Monomial m = fresh.front();
        fresh.pop_front();
        for (const auto& other : seen)
            if (auto x = m.intersect(other); x && family.insert(*x).second) fresh.push_back(*x);
        seen.push_back(m);
    }
    for (int i = 1; i <= n; ++i) family.insert(Monomial::singleton(i));
    return {n, std::vector<Monomial>(family.begin(), family.end())};
}

LinDigraph hasse_digraph(const ClosureFamily& family) {
    const auto& members = family.members;
    std::vector<std::size_t> by_size(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
        return members[a].size() > members[b].size();
    });

    std::vector<Arc> arcs;
    for (std::size_t top = 0; top < members.size(); ++top) {
        std::vector<std::size_t> covers;
        for (auto c : by_size) {
            if (!members[c].is_proper_subset_of(members[top])) continue;
            bool below = std::any_of(covers.begin(), covers.end(), [&](std::size_t s) {
                return members[c].is_subset_of(members[s]);
            });
            if (!below) covers.push_back(c);
        }
        std::sort(covers.begin(), covers.end());
        for (auto c : covers) arcs.push_back({top, c});
    }
    return LinDigraph(members, std::move(arcs));
}

Linearization build_star(std::span<const Monomial> targets, int n) {
    ClosureFamily family = intersection_closure(targets, n);
    LinDigraph hasse = hasse_digraph(family);
    std::vector<AndConstraint> constraints;
    for (std::size_t v = 0; v < hasse.node_count(); ++v) {
        if (hasse.node(v).is_singleton()) continue;
        std::vector<Monomial> children;
        for (auto w : hasse.out(v)) children.push_back(hasse.node(w));
        if (children.size() < 2 || unite_all(children) != hasse.node(v))
            throw Error("Hasse children of " + hasse.node(v).to_string() + " do not cover it");
        constraints.emplace_back(hasse.node(v), std::move(children));
    }
    return Linearization(n, family.members, std::move(constraints));
}

} // namespace polylin
