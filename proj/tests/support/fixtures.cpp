#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fixtures {

using polylin::AndConstraint;

namespace {

AndConstraint con(Monomial r, std::vector<Monomial> ops) { return AndConstraint(std::move(r), std::move(ops)); }

Linearization from_constraints(int n, std::vector<AndConstraint> cs) {
    std::vector<Monomial> ms;
    for (const auto& c : cs) ms.push_back(c.resultant);
    return Linearization::with_singletons(n, std::move(ms), std::move(cs));
}

} // namespace

Linearization running_example() {
    return from_constraints(6, {
        con({1, 2}, {{1}, {2}}),
        con({2, 3}, {{2}, {3}}),
        con({3, 4}, {{3}, {4}}),
        con({4, 6}, {{4}, {6}}),
        con({1, 2, 3}, {{1, 2}, {2, 3}}),
        con({2, 3, 4}, {{2, 3}, {3, 4}}),
        con({3, 4, 5}, {{3, 4}, {5}}),
        con({4, 5, 6}, {{4, 6}, {5}}),
        con({1, 2, 3, 4}, {{1, 2, 3}, {2, 3, 4}}),
        con({1, 2, 3, 4, 5}, {{1, 2, 3, 4}, {3, 4, 5}}),
    });
}

std::vector<Monomial> running_targets() { return {{1, 2, 3, 4}, {3, 4, 5}, {4, 5, 6}}; }

Monomial running_top() { return {1, 2, 3, 4, 5}; }

Linearization split_example() {
    return from_constraints(5, {
        con({1, 3}, {{1}, {3}}),
        con({1, 2}, {{1}, {2}}),
        con({2, 4}, {{2}, {4}}),
        con({2, 3, 4}, {{2, 4}, {3}}),
        con({2, 3, 4, 5}, {{2, 3, 4}, {5}}),
    });
}

std::vector<Monomial> split_targets() { return {{1, 3}, {1, 2}, {2, 3, 4, 5}}; }

Linearization joined_example() {
    return from_constraints(6, {
        con({2, 3}, {{2}, {3}}),
        con({3, 4}, {{3}, {4}}),
        con({5, 6}, {{5}, {6}}),
        con({1, 2, 3}, {{1}, {2, 3}}),
        con({2, 3, 4}, {{2, 3}, {3, 4}}),
        con({3, 4, 5, 6}, {{3, 4}, {5, 6}}),
    });
}

std::vector<Monomial> joined_targets() { return {{1, 2, 3}, {2, 3}, {3, 4, 5, 6}}; }

std::vector<std::vector<Monomial>> all_families(int n, int max_size) {
    std::vector<Monomial> subsets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) vars.push_back(i + 1);
        if (vars.size() >= 2) subsets.emplace_back(std::move(vars));
    }
    std::sort(subsets.begin(), subsets.end());

    std::vector<std::vector<Monomial>> out;
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!pick.empty()) {
            std::vector<Monomial> fam;
            for (auto i : pick) fam.push_back(subsets[i]);
            out.push_back(std::move(fam));
        }
        if (static_cast<int>(pick.size()) == max_size) return;
        for (std::size_t i = from; i < subsets.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Monomial> random_family(std::mt19937_64& rng, int n, int max_targets) {
    std::uniform_int_distribution<int> count(1, max_targets);
    std::uniform_int_distribution<int> size(2, std::min(n, 5));
    std::set<Monomial> fam;
    const int k = count(rng);
    for (int j = 0; j < k; ++j) {
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(size(rng));
        fam.insert(Monomial(pool));
    }
    return {fam.begin(), fam.end()};
}

Linearization random_acyclic(std::mt19937_64& rng, int n, int max_constraints) {
    std::vector<Monomial> ms;
    std::vector<int> comp;
    for (int i = 1; i <= n; ++i) {
        ms.push_back(Monomial::singleton(i));
        comp.push_back(i);
    }
    std::vector<AndConstraint> cs;
    std::uniform_int_distribution<int> arity(2, 3);
    for (int step = 0; step < max_constraints; ++step) {
        std::set<int> comps(comp.begin(), comp.end());
        if (comps.size() < 2) break;
        const int k = std::min<int>(arity(rng), static_cast<int>(comps.size()));
        std::vector<int> chosen(comps.begin(), comps.end());
        std::shuffle(chosen.begin(), chosen.end(), rng);
        chosen.resize(k);
        std::vector<Monomial> ops;
        for (int c : chosen) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < ms.size(); ++i)
                if (comp[i] == c) members.push_back(i);
            std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
            ops.push_back(ms[members[pick(rng)]]);
        }
        AndConstraint c = AndConstraint::combining(ops);
        const int merged = chosen.front();
        for (auto& x : comp)
            if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) x = merged;
        ms.push_back(c.resultant);
        comp.push_back(merged);
        cs.push_back(std::move(c));
    }
    return Linearization(n, std::move(ms), std::move(cs));
}

Linearization random_simple(std::mt19937_64& rng, int n, int constraints) {
    std::vector<Monomial> ms;
    for (int i = 1; i <= n; ++i) ms.push_back(Monomial::singleton(i));
    std::set<Monomial> have(ms.begin(), ms.end());
    std::vector<AndConstraint> cs;
    std::uniform_int_distribution<int> arity(2, 3);
    for (int tries = 0; static_cast<int>(cs.size()) < constraints && tries < 200 * constraints; ++tries) {
        std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
        std::vector<Monomial> ops;
        const int k = arity(rng);
        for (int j = 0; j < k; ++j) ops.push_back(ms[pick(rng)]);
        polylin::canonicalize(ops);
        if (ops.size() < 2) continue;
        Monomial u = polylin::unite_all(ops);
        if (have.contains(u)) continue;
        if (std::any_of(ops.begin(), ops.end(), [&](const Monomial& o) { return o == u; })) continue;
        have.insert(u);
        ms.push_back(u);
        cs.emplace_back(u, std::move(ops));
    }
    return Linearization(n, std::move(ms), std::move(cs));
}

polylin::Objective random_objective(std::mt19937_64& rng, const std::vector<Monomial>& support, int lo,
                                    int hi) {
    std::uniform_int_distribution<int> coef(lo, hi);
    polylin::Objective a;
    for (const auto& m : support) a[m] = coef(rng);
    return a;
}

Linearization chain(int n) {
    std::vector<Monomial> targets;
    for (int i = 1; i < n; ++i) targets.push_back(Monomial{i, i + 1});
    return polylin::standard_linearization(n, std::move(targets));
}

} // namespace fixtures
