#include "polylin/dp_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

#include "polylin/error.hpp"

namespace polylin {

namespace {

constexpr std::size_t none = SIZE_MAX;

struct Rooting {
    std::vector<std::size_t> roots;
    std::vector<std::size_t> parent; ///< none for roots and unrooted nodes
    std::vector<std::size_t> depth;
    std::vector<std::size_t> order;  ///< BFS order over rooted components
};

Rooting root_forest(const LinDigraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& a : g.arcs()) {
        adj[a.from].push_back(a.to);
        adj[a.to].push_back(a.from);
    }
    Rooting r;
    r.parent.assign(n, none);
    r.depth.assign(n, 0);

    // Component ids first, so that each component gets its lexicographically
    // smallest in-degree-0 proper monomial as root.
    std::vector<std::size_t> comp(n, none);
    std::vector<std::size_t> comp_root;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != none) continue;
        const std::size_t id = comp_root.size();
        comp_root.push_back(none);
        std::deque<std::size_t> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : adj[v])
                if (comp[w] == none) { comp[w] = id; queue.push_back(w); }
        }
    }
    // Nodes are in lexicographic order, so the first hit per component wins.
    for (std::size_t v = 0; v < n; ++v)
        if (!g.node(v).is_singleton() && g.in_degree(v) == 0 && comp_root[comp[v]] == none)
            comp_root[comp[v]] = v;

    std::vector<char> seen(n, 0);
    for (auto root : comp_root) {
        if (root == none) continue;
        r.roots.push_back(root);
        std::deque<std::size_t> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            r.order.push_back(v);
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    r.parent[w] = v;
                    r.depth[w] = r.depth[v] + 1;
                    queue.push_back(w);
                }
        }
    }
    return r;
}

void check_forest(const Linearization& lin, const LinDigraph& g) {
    require_simple_valid(lin, "solve_acyclic");
    if (!g.undirected_acyclic())
        throw StructureError("the linearization digraph has an undirected cycle; use decide_integral, "
                             "the brute-force oracle or the LP engine instead");
}

bool has_arc(const LinDigraph& g, std::size_t from, std::size_t to) {
    auto out = g.out(from);
    return std::find(out.begin(), out.end(), to) != out.end();
}

// A partial assignment over a subtree with its exact cost.
struct Table {
    Rational cost;
    std::vector<std::pair<std::uint32_t, std::uint8_t>> entries;

    void absorb(const Table& other) {
        cost += other.cost;
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
};

struct NodeTables {
    Table zero, one; // zeroUp/oneUp or zeroDown/oneDown
};

} // namespace

TreeDecoration tree_decoration(const Linearization& lin) {
    LinDigraph g(lin);
    check_forest(lin, g);
    Rooting r = root_forest(g);
    TreeDecoration d;
    for (auto v : r.roots) d.roots.push_back(g.node(v));
    for (auto v : r.order) {
        d.depth[g.node(v)] = r.depth[v];
        if (r.parent[v] == none) continue;
        d.alpha.emplace(g.node(v), g.node(r.parent[v]));
        if (has_arc(g, r.parent[v], v)) d.up.insert(g.node(v));
        else d.down.insert(g.node(v));
    }
    return d;
}

DpResult solve_acyclic(const Linearization& lin, const Objective& a, DpTrace* trace) {
    LinDigraph g(lin);
    check_forest(lin, g);
    const std::size_t n = g.node_count();

    std::vector<Rational> cost(n);
    for (const auto& [m, c] : a) {
        auto v = g.index_of(m);
        if (!v) throw InvalidInput("objective term " + m.to_string() + " is not a monomial of L");
        cost[*v] = canonical(c);
    }

    Rooting r = root_forest(g);
    std::vector<char> is_up(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (r.parent[v] != none) is_up[v] = has_arc(g, r.parent[v], v);

    std::vector<std::size_t> order = r.order;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return r.depth[x] > r.depth[y]; });

    std::vector<NodeTables> tables(n);
    auto record = [&](std::size_t v, const Table& t, std::optional<int> ext) {
        if (!trace) return;
        Assignment y;
        for (auto [w, b] : t.entries) y[g.node(w)] = b;
        if (ext) y[g.node(r.parent[v])] = *ext;
        trace->tables.emplace_back(g.node(v), std::move(y));
    };
    // Cheaper of the two tables of an up child; ties go to the 1-table.
    auto cheaper = [&](std::size_t c) -> const Table& {
        return tables[c].zero.cost < tables[c].one.cost ? tables[c].zero : tables[c].one;
    };
    // m = 0 over operand children: each takes its cheaper table, and if all
    // prefer 1, the one with the smallest a(zero) - a(one) is flipped.
    auto zero_over_operands = [&](Table& t, const std::vector<std::size_t>& ops) {
        std::size_t flip = none;
        Rational best_gap;
        bool some_zero = false;
        for (auto c : ops) {
            if (tables[c].zero.cost < tables[c].one.cost) some_zero = true;
            Rational gap = tables[c].zero.cost - tables[c].one.cost;
            if (flip == none || gap < best_gap || (gap == best_gap && g.node(c) < g.node(flip))) {
                flip = c;
                best_gap = gap;
            }
        }
        for (auto c : ops)
            t.absorb(!some_zero && c == flip ? tables[c].zero : cheaper(c));
    };

    for (auto m : order) {
        const std::size_t alpha = r.parent[m];
        std::vector<std::size_t> operands, resultants;
        for (auto w : g.out(m))
            if (w != alpha) operands.push_back(w);
        for (auto w : g.in(m))
            if (w != alpha) resultants.push_back(w);
        std::sort(operands.begin(), operands.end());

        NodeTables nt;
        if (alpha == none || is_up[m]) {
            nt.one.cost = cost[m];
            nt.one.entries.push_back({static_cast<std::uint32_t>(m), 1});
            for (auto c : operands) nt.one.absorb(tables[c].one);
            for (auto c : resultants) nt.one.absorb(tables[c].one);

            nt.zero.entries.push_back({static_cast<std::uint32_t>(m), 0});
            if (!operands.empty()) zero_over_operands(nt.zero, operands);
            for (auto c : resultants) nt.zero.absorb(tables[c].zero);
            record(m, nt.zero, std::nullopt);
            record(m, nt.one, std::nullopt);
        } else {
            // Extension coordinate alpha(m), an operand of m's constraint.
            nt.zero.entries.push_back({static_cast<std::uint32_t>(m), 0});
            for (auto c : operands) nt.zero.absorb(cheaper(c));
            for (auto c : resultants) nt.zero.absorb(tables[c].zero);

            Table y0;
            y0.entries.push_back({static_cast<std::uint32_t>(m), 0});
            zero_over_operands(y0, operands);
            for (auto c : resultants) y0.absorb(tables[c].zero);
            Table y1;
            y1.cost = cost[m];
            y1.entries.push_back({static_cast<std::uint32_t>(m), 1});
            for (auto c : operands) y1.absorb(tables[c].one);
            for (auto c : resultants) y1.absorb(tables[c].one);
            nt.one = y0.cost < y1.cost ? std::move(y0) : std::move(y1);
            record(m, nt.zero, 0);
            record(m, nt.one, 1);
        }
        for (auto c : operands) tables[c] = {};
        for (auto c : resultants) tables[c] = {};
        tables[m] = std::move(nt);
    }

    DpResult result;
    result.value = 0;
    std::vector<int> value(n, -1);
    for (auto root : r.roots) {
        const Table& best = tables[root].zero.cost < tables[root].one.cost ? tables[root].zero
                                                                           : tables[root].one;
        for (auto [w, b] : best.entries) value[w] = b;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (value[v] < 0) {
            if (!g.node(v).is_singleton() || g.in_degree(v) || g.out_degree(v))
                throw Error("DP left " + g.node(v).to_string() + " unassigned");
            value[v] = cost[v] < 0 ? 1 : 0;
        }
    for (std::size_t v = 0; v < n; ++v) {
        result.y[g.node(v)] = value[v];
        if (value[v]) result.value += cost[v];
    }
    for (const auto& c : lin.constraints()) {
        int lo = 1;
        for (const auto& op : c.operands) lo = std::min(lo, result.y[op]);
        if (result.y[c.resultant] != lo)
            throw Error("DP assignment violates the constraint for " + c.resultant.to_string());
    }
    return result;
}

} // namespace polylin
