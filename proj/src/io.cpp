#include "polylin/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "polylin/error.hpp"

namespace polylin {

std::vector<Monomial> PolynomialInstance::targets() const {
    std::vector<Monomial> out;
    for (const auto& [m, c] : terms)
        if (!m.is_singleton()) out.push_back(m);
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("cannot write " + path.string());
}

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
    return j.at(name);
}

int read_n(const Json& j) {
    const Json& n = field(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 1'000'000)
        throw InvalidInput("'n' must be a positive integer");
    return n.get<int>();
}

Rational read_coef(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InvalidInput("coefficients must be integers or rational strings");
}

Json monomial_list(const std::vector<Monomial>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

const char* kind_name(DiagnosticKind k) {
    switch (k) {
    case DiagnosticKind::IndexOutOfRange: return "index-out-of-range";
    case DiagnosticKind::MissingSingleton: return "missing-singleton";
    case DiagnosticKind::UnknownMonomial: return "unknown-monomial";
    case DiagnosticKind::TooFewOperands: return "too-few-operands";
    case DiagnosticKind::ResultantMismatch: return "resultant-mismatch";
    case DiagnosticKind::OperandNotProperSubset: return "operand-not-proper-subset";
    case DiagnosticKind::DuplicateConstraint: return "duplicate-constraint";
    case DiagnosticKind::Inconsistent: return "inconsistent";
    case DiagnosticKind::NonSimple: return "non-simple";
    }
    return "unknown";
}

} // namespace

Monomial monomial_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("a monomial must be an array of indices");
    std::vector<int> vars;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidInput("monomial indices must be integers");
        vars.push_back(v.get<int>());
    }
    return Monomial(std::move(vars));
}

Json to_json(const Monomial& m) {
    Json out = Json::array();
    for (int i : m.vars()) out.push_back(i);
    return out;
}

Linearization linearization_from_json(const Json& j) {
    const int n = read_n(j);
    std::vector<Monomial> monomials;
    if (j.contains("monomials"))
        for (const auto& m : field(j, "monomials")) monomials.push_back(monomial_from_json(m));
    std::vector<AndConstraint> constraints;
    if (j.contains("constraints"))
        for (const auto& c : field(j, "constraints")) {
            std::vector<Monomial> ops;
            for (const auto& op : field(c, "operands")) ops.push_back(monomial_from_json(op));
            constraints.emplace_back(monomial_from_json(field(c, "resultant")), std::move(ops));
        }
    // Without an explicit monomial list the resultants define M.
    if (!j.contains("monomials"))
        for (const auto& c : constraints)
            if (std::find(monomials.begin(), monomials.end(), c.resultant) == monomials.end())
                monomials.push_back(c.resultant);
    return Linearization::with_singletons(n, std::move(monomials), std::move(constraints));
}

Json to_json(const Linearization& lin) {
    Json out;
    out["n"] = lin.n();
    out["monomials"] = monomial_list(lin.monomials());
    Json cs = Json::array();
    for (const auto& c : lin.constraints())
        cs.push_back({{"resultant", to_json(c.resultant)}, {"operands", monomial_list(c.operands)}});
    out["constraints"] = cs;
    return out;
}

PolynomialInstance polynomial_from_json(const Json& j) {
    PolynomialInstance p;
    p.n = read_n(j);
    for (const auto& t : field(j, "terms")) {
        Monomial m = monomial_from_json(field(t, "vars"));
        if (m.max_index() > p.n) throw InvalidInput("term " + m.to_string() + " exceeds n");
        p.terms[m] += read_coef(field(t, "coef"));
    }
    return p;
}

Json to_json(const PolynomialInstance& poly) {
    Json terms = Json::array();
    for (const auto& [m, c] : poly.terms) terms.push_back({{"vars", to_json(m)}, {"coef", to_string(c)}});
    return {{"n", poly.n}, {"terms", terms}};
}

bool is_linearization_json(const Json& j) {
    return j.is_object() && (j.contains("constraints") || j.contains("monomials")) && !j.contains("terms");
}

Json to_json(const Assignment& y) {
    Json out = Json::object();
    for (const auto& [m, v] : y) out[m.key()] = v;
    return out;
}

Json to_json(const RationalPoint& y) {
    Json out = Json::object();
    for (const auto& [m, v] : y) out[m.key()] = to_string(v);
    return out;
}

Json to_json(const BadCycle& cycle) {
    Json arcs = Json::array();
    for (const auto& [from, to] : cycle.arcs) arcs.push_back({to_json(from), to_json(to)});
    return {{"nodes", monomial_list(cycle.nodes)},
            {"arcs", arcs},
            {"upper", monomial_list(cycle.upper)},
            {"lower", monomial_list(cycle.lower)}};
}

Json to_json(const FractionalCertificate& cert) {
    Json arcs = Json::array();
    for (const auto& [from, to] : cert.cycle.arcs) arcs.push_back({to_json(from), to_json(to)});
    Json aux = Json::object();
    aux["upper"] = monomial_list(cert.cycle.upper);
    aux["lower"] = monomial_list(cert.cycle.lower);
    if (cert.construction == Construction::PathCount) {
        aux["u"] = to_json(*cert.u);
        aux["l"] = to_json(*cert.l);
        aux["s"] = to_json(*cert.s);
        aux["t"] = to_json(*cert.t);
        Json k = Json::object();
        for (const auto& [m, c] : cert.path_counts) k[m.key()] = c.get_str();
        aux["k"] = k;
    } else {
        aux["u_k"] = to_json(*cert.u_k);
        aux["s"] = monomial_list(cert.s_nodes);
        aux["t"] = monomial_list(cert.t_nodes);
    }
    return {{"cycle", arcs},
            {"point", to_json(cert.point)},
            {"construction", cert.construction == Construction::PathCount ? "path-count" : "half-point"},
            {"aux", aux}};
}

Json to_json(const TdiCertificate& cert) {
    return {{"case", cert.case_id},
            {"w", cert.w},
            {"wbar", cert.wbar},
            {"primal", {{"operands", cert.primal}, {"resultant", cert.primal_resultant}}},
            {"dual", {{"alpha", cert.alpha}, {"beta", cert.beta}, {"gamma", cert.gamma}, {"delta", cert.delta}}},
            {"primal_value", cert.primal_value},
            {"dual_value", cert.dual_value}};
}

Json to_json(const MipVerdict& verdict) {
    Json out;
    out["holds"] = verdict.holds;
    out["violated"] = verdict.violated ? Json(condition_name(*verdict.violated)) : Json(nullptr);
    out["witness"] = monomial_list(verdict.witness_monomials);
    if (!verdict.witness_indices.empty()) out["indices"] = verdict.witness_indices;
    return out;
}

Json to_json(const ValidationReport& report) {
    Json diags = Json::array();
    for (const auto& d : report.diagnostics) diags.push_back({{"kind", kind_name(d.kind)}, {"message", d.message}});
    return {{"valid", report.ok()}, {"simple", report.simple}, {"diagnostics", diags}};
}

} // namespace polylin
