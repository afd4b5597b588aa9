#include "polylin/linearization.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "polylin/error.hpp"

namespace polylin {

AndConstraint::AndConstraint(Monomial resultant_, std::vector<Monomial> operands_)
    : resultant(std::move(resultant_)), operands(std::move(operands_)) {
    canonicalize(operands);
}

AndConstraint AndConstraint::combining(std::vector<Monomial> operands) {
    if (operands.empty()) throw InvalidInput("AND of no operands");
    Monomial res = unite_all(operands);
    return AndConstraint(std::move(res), std::move(operands));
}

Linearization::Linearization(int n, std::vector<Monomial> monomials,
                             std::vector<AndConstraint> constraints)
    : n_(n), monomials_(std::move(monomials)), constraints_(std::move(constraints)) {
    canonicalize(monomials_);
    std::sort(constraints_.begin(), constraints_.end());
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

Linearization Linearization::with_singletons(int n, std::vector<Monomial> monomials,
                                             std::vector<AndConstraint> constraints) {
    if (n < 1) throw InvalidInput("n must be positive");
    for (int i = 1; i <= n; ++i) monomials.push_back(Monomial::singleton(i));
    return Linearization(n, std::move(monomials), std::move(constraints));
}

std::optional<std::size_t> Linearization::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Monomial> Linearization::singletons() const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_)
        if (m.is_singleton()) out.push_back(m);
    return out;
}

std::vector<Monomial> Linearization::proper_monomials() const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_)
        if (!m.is_singleton()) out.push_back(m);
    return out;
}

const AndConstraint* Linearization::constraint_for(const Monomial& m) const {
    auto it = std::lower_bound(constraints_.begin(), constraints_.end(), m,
                               [](const AndConstraint& c, const Monomial& key) {
                                   return c.resultant < key;
                               });
    if (it == constraints_.end() || it->resultant != m) return nullptr;
    return &*it;
}

bool Linearization::is_simple() const {
    std::size_t proper = 0;
    for (const auto& m : monomials_)
        if (!m.is_singleton()) ++proper;
    return constraints_.size() == proper;
}

bool ValidationReport::has(DiagnosticKind kind) const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [kind](const Diagnostic& d) { return d.kind == kind; });
}

namespace {

std::string constraint_text(const AndConstraint& c) {
    std::string s = c.resultant.to_string() + " = AND(";
    for (std::size_t i = 0; i < c.operands.size(); ++i) {
        if (i) s += ", ";
        s += c.operands[i].to_string();
    }
    return s + ")";
}

} // namespace

ValidationReport validate(const Linearization& lin, bool require_simple) {
    ValidationReport report;
    auto add = [&](DiagnosticKind kind, std::string msg) {
        report.diagnostics.push_back({kind, std::move(msg)});
    };

    if (lin.n() < 1) add(DiagnosticKind::IndexOutOfRange, "n must be positive");
    for (const auto& m : lin.monomials())
        if (m.max_index() > lin.n())
            add(DiagnosticKind::IndexOutOfRange,
                "monomial " + m.to_string() + " uses an index above n=" + std::to_string(lin.n()));
    for (int i = 1; i <= lin.n(); ++i)
        if (!lin.contains(Monomial::singleton(i)))
            add(DiagnosticKind::MissingSingleton, "missing singleton {" + std::to_string(i) + "}");

    std::set<Monomial> produced;
    const AndConstraint* prev = nullptr;
    for (const auto& c : lin.constraints()) {
        const std::string text = constraint_text(c);
        if (prev && *prev == c) add(DiagnosticKind::DuplicateConstraint, "duplicate constraint " + text);
        prev = &c;

        if (c.operands.size() < 2)
            add(DiagnosticKind::TooFewOperands, "constraint " + text + " has fewer than 2 operands");
        if (!lin.contains(c.resultant))
            add(DiagnosticKind::UnknownMonomial,
                "resultant " + c.resultant.to_string() + " is not in the monomial set");
        for (const auto& op : c.operands) {
            if (!lin.contains(op))
                add(DiagnosticKind::UnknownMonomial,
                    "operand " + op.to_string() + " of " + text + " is not in the monomial set");
            if (!op.is_proper_subset_of(c.resultant))
                add(DiagnosticKind::OperandNotProperSubset,
                    "operand not a proper smaller subset: " + op.to_string() + " in " + text);
        }
        if (!c.operands.empty() && unite_all(c.operands) != c.resultant)
            add(DiagnosticKind::ResultantMismatch,
                "inconsistent resultant union in " + text);
        produced.insert(c.resultant);
    }

    for (const auto& m : lin.monomials())
        if (!m.is_singleton() && !produced.contains(m))
            add(DiagnosticKind::Inconsistent,
                "inconsistent: proper monomial " + m.to_string() + " is not the resultant of any constraint");

    report.simple = lin.is_simple() && report.diagnostics.empty();
    if (require_simple && report.diagnostics.empty() && !report.simple)
        add(DiagnosticKind::NonSimple,
            "non-simple: " + std::to_string(lin.constraints().size()) + " constraints for " +
                std::to_string(lin.proper_monomials().size()) + " proper monomials");
    return report;
}

void require_simple_valid(const Linearization& lin, const char* operation) {
    auto report = validate(lin, true);
    if (!report.ok())
        throw StructureError(std::string(operation) + " needs a valid simple linearization: " +
                             report.diagnostics.front().message);
}

Linearization standard_linearization(int n, std::vector<Monomial> targets) {
    if (n < 1) throw InvalidInput("n must be positive");
    canonicalize(targets);
    std::vector<AndConstraint> constraints;
    for (const auto& t : targets) {
        if (t.size() < 2) throw InvalidInput("target " + t.to_string() + " is not a proper monomial");
        if (t.max_index() > n) throw InvalidInput("target " + t.to_string() + " exceeds n");
        std::vector<Monomial> ops;
        for (int i : t.vars()) ops.push_back(Monomial::singleton(i));
        constraints.emplace_back(t, std::move(ops));
    }
    return Linearization::with_singletons(n, std::move(targets), std::move(constraints));
}

LinDigraph::LinDigraph(const Linearization& lin) : nodes_(lin.monomials()) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
    out_.resize(nodes_.size());
    in_.resize(nodes_.size());
    for (const auto& c : lin.constraints()) {
        auto from = index_of(c.resultant);
        if (!from) throw InvalidInput("resultant " + c.resultant.to_string() + " is not a monomial of L");
        for (const auto& op : c.operands) {
            auto to = index_of(op);
            if (!to) throw InvalidInput("operand " + op.to_string() + " is not a monomial of L");
            arcs_.push_back({*from, *to});
            out_[*from].push_back(*to);
            in_[*to].push_back(*from);
        }
    }
}

LinDigraph::LinDigraph(std::vector<Monomial> nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
    out_.resize(nodes_.size());
    in_.resize(nodes_.size());
    for (const auto& a : arcs_) {
        if (a.from >= nodes_.size() || a.to >= nodes_.size()) throw InvalidInput("arc endpoint out of range");
        out_[a.from].push_back(a.to);
        in_[a.to].push_back(a.from);
    }
}

std::optional<std::size_t> LinDigraph::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t LinDigraph::require_index(const Monomial& m) const {
    auto i = index_of(m);
    if (!i) throw InvalidInput(m.to_string() + " is not a node of the digraph");
    return *i;
}

namespace {

std::vector<std::size_t> reach(const std::vector<std::vector<std::size_t>>& adj,
                               std::span<const std::size_t> seeds) {
    std::vector<char> seen(adj.size(), 0);
    std::deque<std::size_t> queue;
    for (auto s : seeds) {
        if (s >= adj.size()) throw InvalidInput("node index out of range");
        if (!seen[s]) { seen[s] = 1; queue.push_back(s); }
    }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : adj[v])
            if (!seen[w]) { seen[w] = 1; queue.push_back(w); }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

} // namespace

std::vector<std::size_t> LinDigraph::successors(std::span<const std::size_t> seeds) const {
    return reach(out_, seeds);
}

std::vector<std::size_t> LinDigraph::predecessors(std::span<const std::size_t> seeds) const {
    return reach(in_, seeds);
}

std::vector<Monomial> LinDigraph::successors(std::span<const Monomial> seeds) const {
    std::vector<std::size_t> idx;
    for (const auto& m : seeds) idx.push_back(require_index(m));
    std::vector<Monomial> out;
    for (auto v : successors(std::span<const std::size_t>(idx))) out.push_back(nodes_[v]);
    return out;
}

std::vector<Monomial> LinDigraph::predecessors(std::span<const Monomial> seeds) const {
    std::vector<std::size_t> idx;
    for (const auto& m : seeds) idx.push_back(require_index(m));
    std::vector<Monomial> out;
    for (auto v : predecessors(std::span<const std::size_t>(idx))) out.push_back(nodes_[v]);
    return out;
}

std::vector<std::size_t> LinDigraph::canonical_order() const {
    std::vector<std::size_t> order(nodes_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return nodes_[a].size() > nodes_[b].size();
    });
    return order;
}

bool LinDigraph::undirected_acyclic() const {
    std::vector<std::size_t> parent(nodes_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& a : arcs_) {
        auto x = find(a.from), y = find(a.to);
        if (x == y) return false;
        parent[x] = y;
    }
    return true;
}

Assignment extend_assignment(const Linearization& lin, const Assignment& x) {
    std::vector<int> bit(lin.n() + 1, 0);
    for (int i = 1; i <= lin.n(); ++i) {
        auto it = x.find(Monomial::singleton(i));
        if (it == x.end()) throw InvalidInput("no value for singleton {" + std::to_string(i) + "}");
        if (it->second != 0 && it->second != 1)
            throw InvalidInput("value of {" + std::to_string(i) + "} is not binary");
        bit[i] = it->second;
    }
    auto product = [&](const Monomial& m) {
        for (int i : m.vars())
            if (i > lin.n() || !bit[i]) return 0;
        return 1;
    };
    for (const auto& [m, v] : x) {
        if (m.is_singleton()) continue;
        if (!lin.contains(m)) throw InvalidInput(m.to_string() + " is not a monomial of L");
        if (v != product(m))
            throw InvalidInput("product-inconsistent value at " + m.to_string() + ": given " +
                               std::to_string(v) + ", product of its variables is " +
                               std::to_string(product(m)));
    }
    Assignment y;
    for (const auto& m : lin.monomials()) y.emplace(m, product(m));
    return y;
}

bool check_path_existence(const LinDigraph& graph) {
    for (std::size_t v = 0; v < graph.node_count(); ++v) {
        std::size_t seed[] = {v};
        auto reached = graph.successors(std::span<const std::size_t>(seed));
        std::set<int> sinks;
        for (auto w : reached)
            if (graph.node(w).is_singleton()) sinks.insert(graph.node(w).front());
        for (int i : graph.node(v).vars())
            if (!sinks.contains(i)) return false;
    }
    return true;
}

bool check_path_existence(const Linearization& lin) {
    return check_path_existence(LinDigraph(lin));
}

} // namespace polylin
