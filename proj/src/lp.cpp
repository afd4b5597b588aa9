#include "polylin/lp.hpp"

#include <limits>

#include "polylin/error.hpp"

namespace polylin {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Standard form: min c.x, A x = b, x >= 0, b >= 0, with a starting basis made
// of slack and artificial columns.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : m_(rows), n_(cols), a_(rows, std::vector<Rational>(cols + 1)), basis_(rows, npos),
          obj_(cols + 1) {}

    Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    Rational& rhs(std::size_t r) { return a_[r][n_]; }
    std::size_t& basis(std::size_t r) { return basis_[r]; }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    // Installs reduced costs of cost vector c for the current basis.
    void set_objective(const std::vector<Rational>& c) {
        for (std::size_t j = 0; j <= n_; ++j) obj_[j] = j < n_ ? c[j] : Rational(0);
        for (std::size_t r = 0; r < m_; ++r) {
            const Rational& cb = c[basis_[r]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= n_; ++j)
                if (a_[r][j] != 0) obj_[j] -= cb * a_[r][j];
        }
    }

    // Objective value of the current basis.
    Rational value() const { return -obj_[n_]; }

    enum class Outcome { Optimal, Unbounded };

    // Bland's rule on the columns for which allowed[j] is set.
    Outcome run(const std::vector<char>& allowed, std::size_t& iterations, std::size_t budget) {
        for (;;) {
            std::size_t enter = npos;
            for (std::size_t j = 0; j < n_; ++j)
                if (allowed[j] && obj_[j] < 0) { enter = j; break; }
            if (enter == npos) return Outcome::Optimal;

            std::size_t leave = npos;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (a_[r][enter] <= 0) continue;
                Rational ratio = a_[r][n_] / a_[r][enter];
                if (leave == npos || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == npos) return Outcome::Unbounded;
            if (++iterations > budget)
                throw GuardExceeded("simplex iteration budget of " + std::to_string(budget) + " exhausted");
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        auto& prow = a_[r];
        Rational inv = 1 / prow[c];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= n_; ++j)
            if (prow[j] != 0) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        auto eliminate = [&](std::vector<Rational>& row) {
            if (row[c] == 0) return;
            Rational f = row[c];
            for (auto j : nz) row[j] -= f * prow[j];
        };
        for (std::size_t i = 0; i < m_; ++i)
            if (i != r) eliminate(a_[i]);
        eliminate(obj_);
        basis_[r] = c;
    }

private:
    std::size_t m_, n_;
    std::vector<std::vector<Rational>> a_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> obj_;
};

// One original variable maps to x = offset + sum sign_k * column_k.
struct VarMap {
    Rational offset;
    std::size_t plus = npos;
    std::size_t minus = npos;
};

bool satisfies(const LpProblem& p, const std::vector<Rational>& x) {
    for (const auto& row : p.rows) {
        Rational lhs = 0;
        for (const auto& [j, a] : row.terms) lhs += a * x[j];
        switch (row.relation) {
        case Relation::LessEq: if (lhs > row.rhs) return false; break;
        case Relation::GreaterEq: if (lhs < row.rhs) return false; break;
        case Relation::Equal: if (lhs != row.rhs) return false; break;
        }
    }
    if (!p.bounds.empty())
        for (std::size_t j = 0; j < p.num_vars; ++j) {
            if (p.bounds[j].lower && x[j] < *p.bounds[j].lower) return false;
            if (p.bounds[j].upper && x[j] > *p.bounds[j].upper) return false;
        }
    else
        for (const auto& v : x)
            if (v < 0) return false;
    return true;
}

} // namespace

LpResult simplex_solve(const LpProblem& problem, std::size_t budget) {
    LpProblem p = problem;
    for (auto& c : p.objective) c.canonicalize();
    for (auto& row : p.rows) {
        row.rhs.canonicalize();
        for (auto& t : row.terms) t.second.canonicalize();
    }
    for (auto& b : p.bounds) {
        if (b.lower) b.lower->canonicalize();
        if (b.upper) b.upper->canonicalize();
    }
    if (p.objective.size() != p.num_vars)
        throw InvalidInput("objective has " + std::to_string(p.objective.size()) + " entries for " +
                           std::to_string(p.num_vars) + " variables");
    if (!p.bounds.empty() && p.bounds.size() != p.num_vars)
        throw InvalidInput("bounds size does not match the variable count");
    for (const auto& row : p.rows)
        for (const auto& t : row.terms)
            if (t.first >= p.num_vars) throw InvalidInput("row references variable " + std::to_string(t.first));

    // Structural columns.
    std::vector<VarMap> map(p.num_vars);
    std::size_t cols = 0;
    std::vector<LpRow> rows = p.rows;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        VarBound b = p.bounds.empty() ? VarBound{} : p.bounds[j];
        if (b.lower && b.upper && *b.upper < *b.lower) {
            LpResult r;
            r.status = LpStatus::Infeasible;
            return r;
        }
        map[j].plus = cols++;
        if (b.lower) map[j].offset = *b.lower;
        else map[j].minus = cols++;
        if (b.upper) rows.push_back({{{j, Rational(1)}}, Relation::LessEq, *b.upper});
    }
    const std::size_t structural = cols;

    // Rows in terms of the columns, rhs made nonnegative.
    struct StdRow {
        std::vector<std::pair<std::size_t, Rational>> terms;
        Relation rel;
        Rational rhs;
    };
    std::vector<StdRow> srows;
    std::size_t slacks = 0, artificials = 0;
    for (const auto& row : rows) {
        StdRow s{{}, row.relation, row.rhs};
        for (const auto& [j, a] : row.terms) {
            if (a == 0) continue;
            s.rhs -= a * map[j].offset;
            s.terms.emplace_back(map[j].plus, a);
            if (map[j].minus != npos) s.terms.emplace_back(map[j].minus, Rational(-a));
        }
        if (s.rhs < 0) {
            s.rhs = -s.rhs;
            for (auto& t : s.terms) t.second = -t.second;
            if (s.rel == Relation::LessEq) s.rel = Relation::GreaterEq;
            else if (s.rel == Relation::GreaterEq) s.rel = Relation::LessEq;
        }
        if (s.rel != Relation::Equal) ++slacks;
        if (s.rel != Relation::LessEq) ++artificials;
        srows.push_back(std::move(s));
    }

    const std::size_t first_artificial = structural + slacks;
    Tableau tab(srows.size(), first_artificial + artificials);
    std::size_t next_slack = structural, next_art = first_artificial;
    for (std::size_t r = 0; r < srows.size(); ++r) {
        const auto& s = srows[r];
        for (const auto& [c, a] : s.terms) tab.at(r, c) += a;
        tab.rhs(r) = s.rhs;
        if (s.rel == Relation::LessEq) {
            tab.at(r, next_slack) = 1;
            tab.basis(r) = next_slack++;
        } else {
            if (s.rel == Relation::GreaterEq) tab.at(r, next_slack++) = -1;
            tab.at(r, next_art) = 1;
            tab.basis(r) = next_art++;
        }
    }

    LpResult result;
    std::vector<char> allowed(tab.cols(), 1);
    if (artificials > 0) {
        std::vector<Rational> c1(tab.cols());
        for (std::size_t j = first_artificial; j < tab.cols(); ++j) c1[j] = 1;
        tab.set_objective(c1);
        tab.run(allowed, result.iterations, budget);
        if (tab.value() > 0) {
            result.status = LpStatus::Infeasible;
            return result;
        }
        // Pivot zero-level artificials out where possible; the rest sit on
        // redundant rows and stay at zero.
        for (std::size_t r = 0; r < tab.rows(); ++r) {
            if (tab.basis(r) < first_artificial) continue;
            for (std::size_t j = 0; j < first_artificial; ++j)
                if (tab.at(r, j) != 0) {
                    tab.pivot(r, j);
                    break;
                }
        }
        for (std::size_t j = first_artificial; j < tab.cols(); ++j) allowed[j] = 0;
    }

    std::vector<Rational> c2(tab.cols());
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        Rational cj = p.sense == Sense::Minimize ? p.objective[j] : Rational(-p.objective[j]);
        c2[map[j].plus] = cj;
        if (map[j].minus != npos) c2[map[j].minus] = -cj;
    }
    tab.set_objective(c2);
    if (tab.run(allowed, result.iterations, budget) == Tableau::Outcome::Unbounded) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    std::vector<Rational> col(tab.cols());
    for (std::size_t r = 0; r < tab.rows(); ++r) col[tab.basis(r)] = tab.rhs(r);
    result.x.assign(p.num_vars, Rational(0));
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        result.x[j] = map[j].offset + col[map[j].plus];
        if (map[j].minus != npos) result.x[j] -= col[map[j].minus];
    }
    result.value = 0;
    for (std::size_t j = 0; j < p.num_vars; ++j) result.value += p.objective[j] * result.x[j];
    Rational tableau_value = p.sense == Sense::Minimize ? tab.value() : Rational(-tab.value());
    for (std::size_t j = 0; j < p.num_vars; ++j) tableau_value += p.objective[j] * map[j].offset;
    if (!satisfies(p, result.x) || tableau_value != result.value)
        throw Error("simplex produced a point that fails re-verification");
    result.status = LpStatus::Optimal;
    return result;
}

LpProblem to_lp(const InequalitySystem& sys, const Objective& obj) {
    LpProblem p;
    p.num_vars = sys.variables.size();
    p.sense = Sense::Minimize;
    p.objective.assign(p.num_vars, Rational(0));
    for (const auto& [m, a] : obj) {
        auto v = sys.index_of(m);
        if (!v) throw InvalidInput("objective term " + m.to_string() + " is not a system variable");
        p.objective[*v] = a;
    }
    p.bounds.assign(p.num_vars, VarBound{std::nullopt, std::nullopt});
    for (const auto& row : sys.rows) {
        if (row.kind == RowKind::LowerBound && row.terms.size() == 1 && row.terms[0].coef < 0) {
            Rational lo = row.rhs / row.terms[0].coef;
            auto& bound = p.bounds[row.terms[0].var].lower;
            if (!bound || lo > *bound) bound = lo;
            continue;
        }
        LpRow r;
        for (const auto& t : row.terms) r.terms.emplace_back(t.var, t.coef);
        r.relation = Relation::LessEq;
        r.rhs = row.rhs;
        p.rows.push_back(std::move(r));
    }
    return p;
}

LpResult optimize_relaxation(const Linearization& lin, const Objective& a) {
    return simplex_solve(to_lp(build_system(lin), a));
}

} // namespace polylin
