#include "polylin/integrality.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>

#include "polylin/error.hpp"
#include "polylin/transform.hpp"

namespace polylin {

namespace {

void check_targets(const Linearization& lin, std::span<const Monomial> targets) {
    for (const auto& t : targets)
        if (t.is_singleton() || !lin.contains(t))
            throw InvalidInput("target " + t.to_string() + " is not a proper monomial of L");
}

bool has_arc(const LinDigraph& g, std::size_t from, std::size_t to) {
    auto out = g.out(from);
    return std::find(out.begin(), out.end(), to) != out.end();
}

// Cycle given by its node sequence; consecutive nodes (cyclically) must be
// joined by an arc in one direction.
BadCycle make_cycle(const LinDigraph& g, const std::vector<std::size_t>& seq) {
    BadCycle c;
    const std::size_t k = seq.size();
    std::vector<int> outdeg(k, 0), indeg(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t a = seq[i], b = seq[(i + 1) % k];
        c.nodes.push_back(g.node(a));
        if (has_arc(g, a, b)) {
            c.arcs.emplace_back(g.node(a), g.node(b));
            ++outdeg[i];
            ++indeg[(i + 1) % k];
        } else if (has_arc(g, b, a)) {
            c.arcs.emplace_back(g.node(b), g.node(a));
            ++outdeg[(i + 1) % k];
            ++indeg[i];
        } else {
            throw Error("cycle nodes " + g.node(a).to_string() + " and " + g.node(b).to_string() +
                        " are not adjacent");
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (outdeg[i] >= 2) c.upper.push_back(g.node(seq[i]));
        if (indeg[i] >= 2) c.lower.push_back(g.node(seq[i]));
    }
    std::sort(c.upper.begin(), c.upper.end());
    std::sort(c.lower.begin(), c.lower.end());
    return c;
}

std::vector<std::vector<std::size_t>> undirected_adjacency(const LinDigraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.node_count());
    for (const auto& a : g.arcs()) {
        adj[a.from].push_back(a.to);
        adj[a.to].push_back(a.from);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

// Closes the first arc that joins two vertices already connected, and walks
// the forest built so far to recover the cycle.
std::optional<std::vector<std::size_t>> any_undirected_cycle(const LinDigraph& g) {
    std::vector<std::size_t> parent(g.node_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<std::vector<std::size_t>> forest(g.node_count());
    for (const auto& a : g.arcs()) {
        auto x = find(a.from), y = find(a.to);
        if (x != y) {
            parent[x] = y;
            forest[a.from].push_back(a.to);
            forest[a.to].push_back(a.from);
            continue;
        }
        std::vector<std::size_t> prev(g.node_count(), SIZE_MAX);
        std::deque<std::size_t> queue{a.from};
        prev[a.from] = a.from;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : forest[v])
                if (prev[w] == SIZE_MAX) { prev[w] = v; queue.push_back(w); }
        }
        std::vector<std::size_t> seq;
        for (auto v = a.to; v != a.from; v = prev[v]) seq.push_back(v);
        seq.push_back(a.from);
        return seq;
    }
    return std::nullopt;
}

// Nodes reachable from u and the number of u-m paths, capped at 2.
std::vector<int> capped_path_counts(const LinDigraph& g, const std::vector<std::size_t>& order,
                                    std::size_t u) {
    std::vector<int> cnt(g.node_count(), 0);
    cnt[u] = 1;
    for (auto v : order)
        if (cnt[v])
            for (auto w : g.out(v)) cnt[w] = std::min(2, cnt[w] + cnt[v]);
    return cnt;
}

// A |U| = 1 cycle in g, if any: two internally disjoint directed paths.
std::optional<std::vector<std::size_t>> single_upper_cycle(const LinDigraph& g) {
    const auto order = g.canonical_order();

    for (auto u : order) {
        if (g.out_degree(u) < 2) continue;
        auto cnt = capped_path_counts(g, order, u);
        std::optional<std::size_t> low;
        for (auto v : order)
            if (cnt[v] >= 2) low = v;
        if (!low) continue;

        // Nodes from which low is reachable.
        std::vector<char> reaches(g.node_count(), 0);
        reaches[*low] = 1;
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            for (auto w : g.out(*it))
                if (reaches[w]) reaches[*it] = 1;

        auto walk = [&](bool first) {
            std::vector<std::size_t> path{u};
            while (path.back() != *low) {
                std::optional<std::size_t> next;
                for (auto w : g.out(path.back())) {
                    if (!reaches[w]) continue;
                    if (!next || (first ? g.node(w) < g.node(*next) : g.node(*next) < g.node(w))) next = w;
                }
                path.push_back(*next);
            }
            return path;
        };
        auto p1 = walk(true);
        auto p2 = walk(false);

        std::size_t d = 0;
        while (d + 1 < p1.size() && d + 1 < p2.size() && p1[d + 1] == p2[d + 1]) ++d;
        std::set<std::size_t> on_p2(p2.begin() + d + 1, p2.end());
        std::size_t r1 = d + 1;
        while (!on_p2.contains(p1[r1])) ++r1;
        std::size_t r2 = std::find(p2.begin() + d + 1, p2.end(), p1[r1]) - p2.begin();

        std::vector<std::size_t> seq(p1.begin() + d, p1.begin() + r1 + 1);
        for (std::size_t i = r2 - 1; i > d; --i) seq.push_back(p2[i]);
        return seq;
    }
    return std::nullopt;
}

struct Relations {
    std::vector<std::vector<char>> succ; ///< succ[v][w]: w reachable from v
};

Relations reachability(const LinDigraph& g) {
    Relations r;
    r.succ.assign(g.node_count(), std::vector<char>(g.node_count(), 0));
    auto order = g.canonical_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto v = *it;
        r.succ[v][v] = 1;
        for (auto w : g.out(v))
            for (std::size_t x = 0; x < g.node_count(); ++x)
                if (r.succ[w][x]) r.succ[v][x] = 1;
    }
    return r;
}

// Properties (d) and (e) for the cycle; (c) holds whenever no |U| = 1 cycle
// exists.
bool lower_upper_separated(const LinDigraph& g, const Relations& rel, const BadCycle& c,
                           std::span<const std::size_t> targets) {
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        if (!g.node(s).is_singleton()) continue;
        int hits = 0;
        for (const auto& l : c.lower)
            if (rel.succ[g.require_index(l)][s]) ++hits;
        if (hits > 1) return false;
    }
    for (auto t : targets) {
        int hits = 0;
        for (const auto& u : c.upper)
            if (rel.succ[t][g.require_index(u)]) ++hits;
        if (hits > 1) return false;
    }
    return true;
}

} // namespace

IntegralityVerdict decide_integral(const Linearization& lin, std::span<const Monomial> targets) {
    require_simple_valid(lin, "decide_integral");
    check_targets(lin, targets);
    LinDigraph g(preprocess(lin, targets));
    IntegralityVerdict v;
    if (g.undirected_acyclic()) return v;
    v.integral = false;
    v.cycle = make_cycle(g, *any_undirected_cycle(g));
    return v;
}

BadCycle find_min_upper_cycle(const Linearization& lin, std::span<const Monomial> targets,
                              std::size_t cycle_budget) {
    require_simple_valid(lin, "find_min_upper_cycle");
    check_targets(lin, targets);
    LinDigraph g(preprocess(lin, targets));
    if (g.undirected_acyclic())
        throw StructureError("the projection is integral; there is no bad cycle");

    if (auto seq = single_upper_cycle(g)) return make_cycle(g, *seq);

    // Enumerate simple undirected cycles, each once: the smallest vertex
    // first, then the orientation whose second vertex is below the last.
    const auto adj = undirected_adjacency(g);
    const auto rel = reachability(g);
    std::vector<std::size_t> target_idx;
    for (const auto& t : targets) target_idx.push_back(g.require_index(t));

    std::optional<BadCycle> best;
    std::size_t found = 0;
    std::size_t steps = 0;
    const std::size_t step_budget = 1000 * cycle_budget + 100000;
    std::vector<char> on_path(g.node_count(), 0);
    std::vector<std::size_t> path;

    auto consider = [&](const std::vector<std::size_t>& seq) {
        if (++found > cycle_budget)
            throw GuardExceeded("cycle search exceeded its budget of " + std::to_string(cycle_budget) +
                                " cycles");
        BadCycle c = make_cycle(g, seq);
        if (best && c.upper.size() >= best->upper.size()) return;
        if (!lower_upper_separated(g, rel, c, target_idx)) return;
        best = std::move(c);
    };

    auto dfs = [&](auto&& self, std::size_t start, std::size_t v) -> void {
        if (++steps > step_budget)
            throw GuardExceeded("cycle search exceeded its step budget");
        for (auto w : adj[v]) {
            if (w == start && path.size() >= 3 && path[1] < path.back()) {
                consider(path);
                continue;
            }
            if (w <= start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        dfs(dfs, s, s);
        on_path[s] = 0;
    }
    if (!best) throw StructureError("no bad cycle satisfies the separation properties");
    return *best;
}

FractionalCertificate fractional_certificate(const Linearization& lin,
                                             std::span<const Monomial> targets,
                                             const BadCycle& cycle) {
    require_simple_valid(lin, "fractional_certificate");
    check_targets(lin, targets);
    LinDigraph g(lin);

    std::vector<std::size_t> seq;
    for (const auto& m : cycle.nodes) seq.push_back(g.require_index(m));
    if (seq.size() < 3) throw StructureError("a bad cycle has at least 3 nodes");
    if (std::set<std::size_t>(seq.begin(), seq.end()).size() != seq.size())
        throw StructureError("cycle repeats a node");
    const BadCycle z = make_cycle(g, seq);
    if (z.upper.empty() || z.upper.size() != z.lower.size())
        throw StructureError("cycle has unbalanced upper and lower nodes");

    std::vector<std::size_t> tidx;
    for (const auto& t : targets) tidx.push_back(g.require_index(t));
    auto succ_t = g.successors(std::span<const std::size_t>(tidx));
    std::set<std::size_t> succ_set(succ_t.begin(), succ_t.end());
    for (const auto& u : z.upper)
        if (!succ_set.contains(g.require_index(u)))
            throw StructureError("upper node " + u.to_string() + " is not a successor of any target");

    auto first_singleton_below = [&](std::size_t v) {
        std::size_t seed[] = {v};
        for (auto w : g.successors(std::span<const std::size_t>(seed)))
            if (g.node(w).is_singleton()) return w;
        throw StructureError("no singleton below " + g.node(v).to_string());
    };
    auto first_target_above = [&](std::size_t v) {
        std::size_t seed[] = {v};
        auto above = g.predecessors(std::span<const std::size_t>(seed));
        std::optional<Monomial> best;
        for (auto w : above)
            for (const auto& t : targets)
                if (g.node(w) == t && (!best || t < *best)) best = t;
        if (!best) throw StructureError("no target above " + g.node(v).to_string());
        return *best;
    };

    FractionalCertificate cert;
    cert.cycle = z;
    cert.cycle.nodes = cycle.nodes;

    if (z.upper.size() == 1) {
        cert.construction = Construction::PathCount;
        const auto u = g.require_index(z.upper[0]);
        const auto l = g.require_index(z.lower[0]);
        const auto s = first_singleton_below(l);
        cert.u = z.upper[0];
        cert.l = z.lower[0];
        cert.s = g.node(s);
        cert.t = first_target_above(u);

        std::vector<BigInt> k(g.node_count(), 0);
        k[s] = 1;
        auto order = g.canonical_order();
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            for (auto w : g.out(*it)) k[*it] += k[w];
        if (k[u] < 2) throw StructureError("k(u) < 2: the cycle does not close above s");
        for (std::size_t v = 0; v < g.node_count(); ++v) {
            cert.path_counts[g.node(v)] = k[v];
            Rational ratio(k[v], k[u]);
            ratio.canonicalize();
            Rational y = 1 - ratio;
            cert.point[g.node(v)] = y < 0 ? Rational(0) : y;
        }
        return cert;
    }

    cert.construction = Construction::HalfPoint;
    std::vector<std::size_t> tg;
    for (const auto& t : targets) tg.push_back(g.require_index(t));
    if (!lower_upper_separated(g, reachability(g), z, tg))
        throw StructureError("cycle violates the lower/upper separation properties");

    // u_k is the smallest upper node; walk the cycle from it towards its
    // smaller neighbour, collecting l_1, u_1, l_2, ..., l_k.
    const Monomial uk = z.upper.front();
    cert.u_k = uk;
    std::size_t start = std::find(cycle.nodes.begin(), cycle.nodes.end(), uk) - cycle.nodes.begin();
    const std::size_t n = cycle.nodes.size();
    int step = cycle.nodes[(start + 1) % n] < cycle.nodes[(start + n - 1) % n] ? 1 : -1;
    std::set<Monomial> uppers(z.upper.begin(), z.upper.end()), lowers(z.lower.begin(), z.lower.end());
    std::vector<std::size_t> s_idx;
    for (std::size_t i = 1; i <= n; ++i) {
        const Monomial& m = cycle.nodes[(start + n + step * static_cast<long>(i)) % n];
        if (lowers.contains(m)) {
            s_idx.push_back(first_singleton_below(g.require_index(m)));
            cert.s_nodes.push_back(g.node(s_idx.back()));
        } else if (uppers.contains(m)) {
            cert.t_nodes.push_back(first_target_above(g.require_index(m)));
        }
    }
    if (std::set<std::size_t>(s_idx.begin(), s_idx.end()).size() != s_idx.size())
        throw StructureError("the chosen singletons s_i are not distinct");

    std::size_t uk_seed[] = {g.require_index(uk)};
    std::vector<char> zero(g.node_count(), 0), half(g.node_count(), 0);
    for (auto v : g.predecessors(std::span<const std::size_t>(uk_seed))) zero[v] = 1;
    for (auto v : g.predecessors(std::span<const std::size_t>(s_idx))) half[v] = 1;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        cert.point[g.node(v)] = zero[v] ? Rational(0) : half[v] ? Rational(1, 2) : Rational(1);
    return cert;
}

TdiCertificate tdi_single_and(std::span<const long long> w, long long wbar) {
    const std::size_t k = w.size();
    if (k < 2) throw InvalidInput("an AND constraint needs at least 2 operands");

    TdiCertificate c;
    c.w.assign(w.begin(), w.end());
    c.wbar = wbar;
    c.primal.assign(k, 1);
    c.primal_resultant = 1;
    c.alpha.assign(k, 0);
    c.gamma.assign(k, 0);

    std::size_t kmin = std::min_element(w.begin(), w.end()) - w.begin();
    bool all_nonneg = std::all_of(w.begin(), w.end(), [](long long x) { return x >= 0; });
    long long neg_sum = 0;
    for (auto x : w)
        if (x < 0) neg_sum += x;

    if (all_nonneg && w[kmin] + wbar <= 0) {
        c.case_id = 1;
        c.primal[kmin] = 0;
        c.primal_resultant = 0;
        for (std::size_t i = 0; i < k; ++i) c.gamma[i] = w[i] - w[kmin];
        c.beta = w[kmin];
    } else if (all_nonneg) {
        c.case_id = 2;
        for (std::size_t i = 0; i < k; ++i) c.gamma[i] = w[i] + std::min(wbar, 0LL);
        c.alpha[kmin] = std::max(wbar, 0LL);
        c.gamma[kmin] = w[kmin] + wbar;
        c.beta = std::max(-wbar, 0LL);
    } else if (neg_sum + wbar <= 0) {
        c.case_id = 3;
        c.primal_resultant = 0;
        for (std::size_t i = 0; i < k; ++i) {
            c.primal[i] = w[i] >= 0 ? 1 : 0;
            c.alpha[i] = std::max(-w[i], 0LL);
            c.gamma[i] = std::max(w[i], 0LL);
        }
    } else {
        c.case_id = 4;
        for (std::size_t i = 0; i < k; ++i) {
            if (w[i] >= 0) c.gamma[i] = w[i];
            else c.alpha[i] = -w[i];
        }
        c.gamma[kmin] = wbar + neg_sum;
        c.alpha[kmin] = wbar - w[kmin] + neg_sum;
    }

    c.primal_value = wbar * c.primal_resultant;
    for (std::size_t i = 0; i < k; ++i) c.primal_value += w[i] * c.primal[i];
    c.dual_value = static_cast<long long>(k - 1) * c.beta + c.delta;
    for (auto g : c.gamma) c.dual_value += g;

    // Both sides are checked here so a wrong case split surfaces immediately.
    bool ok = c.primal_value == c.dual_value && c.beta >= 0 && c.delta >= 0;
    long long alpha_sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
        ok = ok && c.alpha[i] >= 0 && c.gamma[i] >= 0;
        ok = ok && -c.alpha[i] + c.beta + c.gamma[i] >= w[i];
        ok = ok && c.primal_resultant <= c.primal[i];
        alpha_sum += c.alpha[i];
    }
    ok = ok && alpha_sum - c.beta + c.delta >= wbar;
    long long op_sum = std::accumulate(c.primal.begin(), c.primal.end(), 0LL);
    ok = ok && op_sum - c.primal_resultant <= static_cast<long long>(k) - 1;
    if (!ok) throw Error("single-AND certificate failed its own check (case " + std::to_string(c.case_id) + ")");
    return c;
}

} // namespace polylin
