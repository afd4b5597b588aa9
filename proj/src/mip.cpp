#include "polylin/mip.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "polylin/error.hpp"

namespace polylin {

const char* condition_name(Condition c) {
    switch (c) {
    case Condition::A: return "A";
    case Condition::B: return "B";
    case Condition::APrime: return "A'";
    case Condition::BPrime: return "B'";
    }
    return "?";
}

namespace {

std::vector<Monomial> sorted_targets(std::span<const Monomial> targets) {
    std::vector<Monomial> t(targets.begin(), targets.end());
    canonicalize(t);
    for (const auto& m : t)
        if (m.size() < 2) throw InvalidInput("target " + m.to_string() + " is not a proper monomial");
    return t;
}

std::vector<int> meet(const Monomial& a, const Monomial& b) {
    std::vector<int> out;
    std::set_intersection(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                          std::back_inserter(out));
    return out;
}

bool strict_superset(const std::vector<int>& big, const std::vector<int>& small) {
    return big.size() > small.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

MipVerdict check_A(std::span<const Monomial> targets) {
    const auto t = sorted_targets(targets);
    const std::size_t k = t.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                if (a == b || b == c || a == c) continue;
                const auto& m1 = t[a];
                const auto& m2 = t[b];
                const auto& m3 = t[c];
                auto m13 = meet(m3, m1);
                auto m23 = meet(m3, m2);
                std::vector<int> common;
                std::set_intersection(m13.begin(), m13.end(), m2.vars().begin(), m2.vars().end(),
                                      std::back_inserter(common));
                if (common.empty()) continue;
                std::vector<int> both;
                std::set_union(m13.begin(), m13.end(), m23.begin(), m23.end(), std::back_inserter(both));
                if (strict_superset(both, m13) && strict_superset(both, m23))
                    return {true, Condition::A, {m1, m2, m3}, {}};
            }
    return {};
}

MipVerdict check_B(std::span<const Monomial> targets) {
    const auto t = sorted_targets(targets);
    const std::size_t k = t.size();
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            adj[i][j] = adj[j][i] = t[i].intersects(t[j]);

    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t c = b + 1; c < k; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c]) {
                    auto ab = meet(t[a], t[b]);
                    if (std::none_of(ab.begin(), ab.end(), [&](int i) { return t[c].contains(i); }))
                        return {true, Condition::B, {t[a], t[b], t[c]}, {}};
                }

    // Holes: v, a, shortest a-b path outside N[v], b.
    std::vector<std::size_t> best;
    for (std::size_t v = 0; v < k; ++v)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) {
                if (!adj[v][a] || !adj[v][b] || adj[a][b]) continue;
                std::vector<std::size_t> prev(k, k);
                std::vector<char> blocked(k, 0);
                blocked[v] = 1;
                for (std::size_t x = 0; x < k; ++x)
                    if (adj[v][x] && x != a && x != b) blocked[x] = 1;
                std::deque<std::size_t> queue{a};
                prev[a] = a;
                while (!queue.empty() && prev[b] == k) {
                    auto x = queue.front();
                    queue.pop_front();
                    for (std::size_t y = 0; y < k; ++y)
                        if (adj[x][y] && !blocked[y] && prev[y] == k) {
                            prev[y] = x;
                            queue.push_back(y);
                        }
                }
                if (prev[b] == k) continue;
                std::vector<std::size_t> cycle{v};
                std::vector<std::size_t> back;
                for (auto x = b; x != a; x = prev[x]) back.push_back(x);
                back.push_back(a);
                cycle.insert(cycle.end(), back.rbegin(), back.rend());
                if (best.empty() || cycle.size() < best.size()) best = cycle;
            }
    if (best.empty()) return {};
    MipVerdict out{true, Condition::B, {}, {}};
    for (auto x : best) out.witness_monomials.push_back(t[x]);
    return out;
}

MipVerdict has_intersection_property(std::span<const Monomial> targets) {
    if (auto a = check_A(targets); a.holds) {
        a.holds = false;
        return a;
    }
    if (auto b = check_B(targets); b.holds) {
        b.holds = false;
        return b;
    }
    return {true, std::nullopt, {}, {}};
}

MipVerdict check_A_prime(std::span<const Monomial> targets, int n) {
    const auto t = sorted_targets(targets);
    for (const auto& m : t)
        if (m.max_index() > n) throw InvalidInput("target " + m.to_string() + " exceeds n");

    for (int i1 = 1; i1 <= n; ++i1)
        for (int i2 = i1 + 1; i2 <= n; ++i2)
            for (int i3 = 1; i3 <= n; ++i3) {
                if (i3 == i1 || i3 == i2) continue;
                const Monomial want13{i1, i3}, want23{i2, i3}, want123{i1, i2, i3};
                const Monomial* hit[3] = {nullptr, nullptr, nullptr};
                for (const auto& m : t) {
                    auto r = m.intersect(want123);
                    if (!r) continue;
                    if (*r == want13 && !hit[0]) hit[0] = &m;
                    if (*r == want23 && !hit[1]) hit[1] = &m;
                    if (*r == want123 && !hit[2]) hit[2] = &m;
                }
                if (hit[0] && hit[1] && hit[2])
                    return {true, Condition::APrime, {*hit[0], *hit[1], *hit[2]}, {i1, i2, i3}};
            }
    return {};
}

MipVerdict check_B_prime(std::span<const Monomial> targets, int n) {
    const auto t = sorted_targets(targets);
    for (const auto& m : t)
        if (m.max_index() > n) throw InvalidInput("target " + m.to_string() + " exceeds n");
    const std::size_t k = t.size();

    // An index of m_a n m_b that no other monomial on the path contains.
    auto exclusive = [&](std::size_t a, std::size_t b, const std::vector<std::size_t>& members) -> int {
        for (int i : meet(t[a], t[b])) {
            bool alone = true;
            for (auto x : members)
                if (x != a && x != b && t[x].contains(i)) { alone = false; break; }
            if (alone) return i;
        }
        return 0;
    };
    auto chain_ok = [&](const std::vector<std::size_t>& path) {
        for (std::size_t j = 0; j + 1 < path.size(); ++j)
            if (!exclusive(path[j], path[j + 1], path)) return false;
        return true;
    };

    std::size_t steps = 0;
    std::vector<std::size_t> path;
    std::vector<char> on_path(k, 0);
    std::optional<MipVerdict> found;

    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (found) return;
        if (++steps > 50'000'000) throw GuardExceeded("(B') search exceeded its step budget");
        std::size_t v = path.back();
        if (path.size() >= 3 && path[1] < path.back() && t[v].intersects(t[start])) {
            std::vector<int> idx;
            bool ok = true;
            for (std::size_t j = 0; j < path.size() && ok; ++j) {
                int i = exclusive(path[j], path[(j + 1) % path.size()], path);
                ok = i != 0;
                idx.push_back(i);
            }
            if (ok) {
                MipVerdict out{true, Condition::BPrime, {}, idx};
                for (auto x : path) out.witness_monomials.push_back(t[x]);
                found = out;
                return;
            }
        }
        for (std::size_t w = start + 1; w < k; ++w) {
            if (on_path[w] || !t[v].intersects(t[w])) continue;
            on_path[w] = 1;
            path.push_back(w);
            if (chain_ok(path)) self(self, start);
            path.pop_back();
            on_path[w] = 0;
            if (found) return;
        }
    };
    for (std::size_t s = 0; s < k && !found; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        dfs(dfs, s);
        on_path[s] = 0;
    }
    return found ? *found : MipVerdict{};
}

} // namespace polylin
