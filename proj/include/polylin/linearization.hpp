#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polylin/monomial.hpp"

namespace polylin {

/// resultant = AND(operands). Operands are kept sorted and deduplicated.
struct AndConstraint {
    Monomial resultant;
    std::vector<Monomial> operands;

    AndConstraint(Monomial resultant, std::vector<Monomial> operands);

    /// Builds the constraint whose resultant is the union of the operands.
    static AndConstraint combining(std::vector<Monomial> operands);

    std::size_t arity() const { return operands.size(); }

    auto operator<=>(const AndConstraint&) const = default;
    bool operator==(const AndConstraint&) const = default;
};

/// L = (n, M, C). The monomial set is stored sorted; constraints are sorted by
/// resultant, then operands. Construction does not check consistency, use
/// validate() for that.
class Linearization {
public:
    Linearization(int n, std::vector<Monomial> monomials,
                  std::vector<AndConstraint> constraints);

    /// Same as the constructor but adds every singleton {1}..{n}.
    static Linearization with_singletons(int n, std::vector<Monomial> monomials,
                                         std::vector<AndConstraint> constraints);

    int n() const { return n_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    const std::vector<AndConstraint>& constraints() const { return constraints_; }

    bool contains(const Monomial& m) const { return index_.contains(m); }
    std::optional<std::size_t> index_of(const Monomial& m) const;

    std::vector<Monomial> singletons() const;
    std::vector<Monomial> proper_monomials() const;

    /// The first constraint with resultant m (the unique one for simple L).
    const AndConstraint* constraint_for(const Monomial& m) const;

    /// |C| = |M_P|.
    bool is_simple() const;

private:
    int n_;
    std::vector<Monomial> monomials_;
    std::vector<AndConstraint> constraints_;
    std::map<Monomial, std::size_t> index_;
};

enum class DiagnosticKind {
    IndexOutOfRange,
    MissingSingleton,
    UnknownMonomial,
    TooFewOperands,
    ResultantMismatch,
    OperandNotProperSubset,
    DuplicateConstraint,
    Inconsistent,
    NonSimple,
};

struct Diagnostic {
    DiagnosticKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Diagnostic> diagnostics;
    bool simple = false;

    bool ok() const { return diagnostics.empty(); }
    bool has(DiagnosticKind kind) const;
};

/// Empty diagnostics iff L is a consistent linearization. A consistent but
/// non-simple L passes with simple = false unless require_simple is set.
ValidationReport validate(const Linearization& lin, bool require_simple = false);

/// Throws StructureError unless L is valid and simple.
void require_simple_valid(const Linearization& lin, const char* operation);

/// Standard linearization: one constraint per target combining its singletons.
Linearization standard_linearization(int n, std::vector<Monomial> targets);

struct Arc {
    std::size_t from; ///< resultant node
    std::size_t to;   ///< operand node
};

/// D(L): nodes are monomials (in lexicographic order), one arc per
/// (constraint, operand) pair.
class LinDigraph {
public:
    explicit LinDigraph(const Linearization& lin);
    LinDigraph(std::vector<Monomial> nodes, std::vector<Arc> arcs);

    std::size_t node_count() const { return nodes_.size(); }
    const std::vector<Monomial>& nodes() const { return nodes_; }
    const Monomial& node(std::size_t v) const { return nodes_[v]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::optional<std::size_t> index_of(const Monomial& m) const;
    std::size_t require_index(const Monomial& m) const;

    std::span<const std::size_t> out(std::size_t v) const { return out_[v]; }
    std::span<const std::size_t> in(std::size_t v) const { return in_[v]; }
    std::size_t out_degree(std::size_t v) const { return out_[v].size(); }
    std::size_t in_degree(std::size_t v) const { return in_[v].size(); }

    /// Reachable set including the seeds, in node order.
    std::vector<std::size_t> successors(std::span<const std::size_t> seeds) const;
    std::vector<std::size_t> predecessors(std::span<const std::size_t> seeds) const;
    std::vector<Monomial> successors(std::span<const Monomial> seeds) const;
    std::vector<Monomial> predecessors(std::span<const Monomial> seeds) const;

    /// Decreasing cardinality, ties lexicographic. A topological order
    /// whenever every arc goes to a strictly smaller monomial.
    std::vector<std::size_t> canonical_order() const;

    /// True iff the underlying undirected multigraph is a forest.
    bool undirected_acyclic() const;

private:
    std::vector<Monomial> nodes_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::map<Monomial, std::size_t> index_;
};

inline LinDigraph digraph(const Linearization& lin) { return LinDigraph(lin); }

/// y'_m = prod_{i in m} x_{i} on all of M. x must be binary on every
/// singleton; any further entries must already be product-consistent,
/// otherwise InvalidInput names the first offending monomial.
Assignment extend_assignment(const Linearization& lin, const Assignment& x);

/// For every node m and i in m, a directed m-{i} path exists.
bool check_path_existence(const LinDigraph& graph);
bool check_path_existence(const Linearization& lin);

} // namespace polylin
