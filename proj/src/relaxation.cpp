#include "polylin/relaxation.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "polylin/error.hpp"

namespace polylin {

std::optional<std::size_t> InequalitySystem::index_of(const Monomial& m) const {
    auto it = std::lower_bound(variables.begin(), variables.end(), m);
    if (it == variables.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
}

InequalitySystem build_system(const Linearization& lin) {
    InequalitySystem sys;
    sys.variables = lin.monomials();
    auto idx = [&](const Monomial& m) {
        auto i = sys.index_of(m);
        if (!i) throw InvalidInput(m.to_string() + " is not a monomial of L");
        return *i;
    };

    for (std::size_t v = 0; v < sys.variables.size(); ++v) {
        sys.rows.push_back({RowKind::LowerBound, {{v, Rational(-1)}}, Rational(0)});
        sys.rows.push_back({RowKind::UpperBound, {{v, Rational(1)}}, Rational(1)});
    }
    for (const auto& c : lin.constraints()) {
        auto r = idx(c.resultant);
        for (const auto& op : c.operands)
            sys.rows.push_back({RowKind::Pair, {{r, Rational(1)}, {idx(op), Rational(-1)}}, Rational(0)});
    }
    for (const auto& c : lin.constraints()) {
        Row row{RowKind::Sum, {}, Rational(static_cast<long>(c.operands.size()) - 1)};
        for (const auto& op : c.operands) row.terms.push_back({idx(op), Rational(1)});
        row.terms.push_back({idx(c.resultant), Rational(-1)});
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

namespace {

template <class Point>
std::optional<Violation> check_rows(const InequalitySystem& sys, const Point& y, bool support_only) {
    std::vector<const typename Point::mapped_type*> value(sys.variables.size(), nullptr);
    for (std::size_t v = 0; v < sys.variables.size(); ++v) {
        auto it = y.find(sys.variables[v]);
        if (it != y.end()) value[v] = &it->second;
        else if (!support_only)
            throw InvalidInput("point has no coordinate for " + sys.variables[v].to_string());
    }
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        const auto& row = sys.rows[r];
        Rational lhs = 0;
        bool supported = true;
        for (const auto& t : row.terms) {
            if (!value[t.var]) { supported = false; break; }
            lhs += t.coef * canonical(Rational(*value[t.var]));
        }
        if (!supported) continue;
        if (lhs > row.rhs) return Violation{r, Rational(lhs - row.rhs)};
    }
    return std::nullopt;
}

} // namespace

std::optional<Violation> membership(const InequalitySystem& sys, const RationalPoint& y) {
    return check_rows(sys, y, false);
}

std::optional<Violation> membership(const InequalitySystem& sys, const Assignment& y) {
    return check_rows(sys, y, false);
}

std::optional<Violation> membership_on_support(const InequalitySystem& sys, const Assignment& y) {
    return check_rows(sys, y, true);
}

std::string lp_name(const Monomial& m) { return "y_" + m.key(); }

std::string lp_text(const InequalitySystem& sys, const Objective& obj) {
    std::vector<std::pair<std::size_t, Rational>> coefs;
    for (const auto& [m, a] : obj) {
        auto v = sys.index_of(m);
        if (!v) throw InvalidInput("objective term " + m.to_string() + " is not a system variable");
        if (a != 0) coefs.emplace_back(*v, a);
    }

    // Non-terminating decimals are written as integers after scaling by the
    // lcm of the denominators.
    BigInt scale = 1;
    for (const auto& [v, a] : coefs)
        if (!to_exact_decimal(a)) {
            BigInt den = a.get_den();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        }

    std::ostringstream out;
    out << "\\ relaxation with " << sys.variables.size() << " variables and " << sys.rows.size()
        << " rows\n";
    if (scale != 1) out << "\\ objective coefficients scaled by " << scale.get_str() << "\n";
    out << "Minimize\n obj:";
    if (coefs.empty()) out << " 0";
    bool first = true;
    for (const auto& [v, a] : coefs) {
        Rational c = a * Rational(scale);
        std::string num = *to_exact_decimal(c < 0 ? Rational(-c) : c);
        out << (c < 0 ? " - " : (first ? " " : " + ")) << num << " " << lp_name(sys.variables[v]);
        first = false;
    }
    out << "\nSubject To\n";
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        const auto& row = sys.rows[r];
        out << " r" << r << ":";
        bool lead = true;
        for (const auto& t : row.terms) {
            bool neg = t.coef < 0;
            Rational mag = neg ? Rational(-t.coef) : t.coef;
            out << (neg ? " - " : (lead ? " " : " + "));
            if (mag != 1) out << *to_exact_decimal(mag) << " ";
            out << lp_name(sys.variables[t.var]);
            lead = false;
        }
        out << " <= " << *to_exact_decimal(row.rhs) << "\n";
    }
    out << "Bounds\n";
    for (const auto& m : sys.variables) out << " " << lp_name(m) << " free\n";
    out << "End\n";
    return out.str();
}

void export_lp(const InequalitySystem& sys, const Objective& obj, const std::filesystem::path& path) {
    std::string text = lp_text(sys, obj);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write " + path.string());
    file << text;
    if (!file) throw Error("cannot write " + path.string());
}

} // namespace polylin
