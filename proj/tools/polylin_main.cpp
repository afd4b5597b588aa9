// polylin command-line front end. JSON results go to stdout, human-readable
// summaries to stderr.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 usage or input
// error, 3 enumeration guard exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "polylin/dp_solver.hpp"
#include "polylin/error.hpp"
#include "polylin/integrality.hpp"
#include "polylin/io.hpp"
#include "polylin/lp.hpp"
#include "polylin/mip.hpp"
#include "polylin/oracle.hpp"
#include "polylin/relaxation.hpp"
#include "polylin/star.hpp"

using namespace polylin;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// "1,2,3;3,4,5" or a JSON file holding an array of index arrays.
std::vector<Monomial> parse_targets(const std::string& text) {
    std::vector<Monomial> out;
    if (std::filesystem::is_regular_file(text)) {
        Json j = read_json_file(text);
        if (j.is_object() && j.contains("targets")) j = j["targets"];
        if (!j.is_array()) throw InvalidInput("target file must hold an array of monomials");
        for (const auto& m : j) out.push_back(monomial_from_json(m));
        return out;
    }
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> vars;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (item.find_first_not_of(" ") == std::string::npos) continue;
            try {
                std::size_t used = 0;
                vars.push_back(std::stoi(item, &used));
                if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
            } catch (const std::logic_error&) {
                throw InvalidInput("bad target list '" + text + "'");
            }
        }
        if (!vars.empty()) out.emplace_back(std::move(vars));
    }
    return out;
}

Json monomials_json(const std::vector<Monomial>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

int cmd_validate(const std::string& path, bool require_simple) {
    Linearization lin = linearization_from_json(read_json_file(path));
    ValidationReport report = validate(lin, require_simple);
    emit(to_json(report));
    if (report.ok()) {
        std::cerr << "valid" << (report.simple ? ", simple" : ", not simple") << " linearization with "
                  << lin.monomials().size() << " monomials and " << lin.constraints().size()
                  << " constraints\n";
        return kOk;
    }
    for (const auto& d : report.diagnostics) std::cerr << "error: " << d.message << "\n";
    return kFails;
}

int cmd_check_integral(const std::string& path, const std::string& targets_arg) {
    Linearization lin = linearization_from_json(read_json_file(path));
    std::vector<Monomial> targets =
        targets_arg.empty() ? lin.proper_monomials() : parse_targets(targets_arg);
    IntegralityVerdict verdict = decide_integral(lin, targets);

    Json out;
    out["integral"] = verdict.integral;
    out["targets"] = monomials_json(targets);
    if (verdict.integral) {
        emit(out);
        std::cerr << "integral: no undirected cycle inside succ(T)\n";
        return kOk;
    }

    BadCycle cycle = find_min_upper_cycle(lin, targets);
    FractionalCertificate cert = fractional_certificate(lin, targets, cycle);
    auto violation = membership(build_system(lin), cert.point);
    RationalPoint projected;
    for (const auto& [m, v] : cert.point)
        if (m.is_singleton() || std::find(targets.begin(), targets.end(), m) != targets.end())
            projected[m] = v;
    out["cycle"] = to_json(cycle);
    out["certificate"] = to_json(cert);
    out["point_in_relaxation"] = !violation.has_value();
    try {
        out["outside_integer_hull"] = !hull_membership(lin.n(), targets, projected);
    } catch (const GuardExceeded&) {
        out["outside_integer_hull"] = nullptr;
    }
    emit(out);
    std::cerr << "not integral: cycle with " << cycle.upper.size() << " upper node(s), "
              << (cert.construction == Construction::PathCount ? "path-count" : "half-point")
              << " certificate\n";
    return kFails;
}

int cmd_check_mip(const std::string& path, bool cross_check) {
    PolynomialInstance poly = polynomial_from_json(read_json_file(path));
    auto targets = poly.targets();
    MipVerdict v = has_intersection_property(targets);
    Json out;
    out["mip"] = v.holds;
    out["violated"] = v.violated ? Json(condition_name(*v.violated)) : Json(nullptr);
    out["witness"] = monomials_json(v.witness_monomials);
    out["prime_agrees"] = nullptr;
    bool agrees = true;
    if (cross_check) {
        MipVerdict ap = check_A_prime(targets, poly.n);
        MipVerdict bp = check_B_prime(targets, poly.n);
        agrees = (ap.holds || bp.holds) == !v.holds;
        out["prime_agrees"] = agrees;
        Json prime;
        prime["A'"] = to_json(ap);
        prime["B'"] = to_json(bp);
        out["prime_conditions"] = prime;
    }
    emit(out);
    if (!agrees) {
        std::cerr << "error: (A) or (B) and (A') or (B') disagree\n";
        return kFails;
    }
    if (v.holds) {
        std::cerr << "monomial intersection property holds\n";
        return kOk;
    }
    std::cerr << "intersection property violated (" << condition_name(*v.violated) << ")\n";
    return kFails;
}

int cmd_build_star(const std::string& path, const std::string& output) {
    PolynomialInstance poly = polynomial_from_json(read_json_file(path));
    Linearization star = build_star(poly.targets(), poly.n);
    write_text_file(output, to_json(star).dump(2) + "\n");
    Json out;
    out["output"] = output;
    out["monomials"] = star.monomials().size();
    out["constraints"] = star.constraints().size();
    out["acyclic"] = LinDigraph(star).undirected_acyclic();
    emit(out);
    std::cerr << "wrote L* with " << star.monomials().size() << " monomials to " << output << "\n";
    return kOk;
}

// Objective terms must be monomials of the linearization.
void require_terms_in(const PolynomialInstance& poly, const Linearization& lin) {
    if (poly.n != lin.n()) throw InvalidInput("polynomial and linearization disagree on n");
    for (const auto& [m, c] : poly.terms)
        if (!lin.contains(m)) throw InvalidInput("term " + m.to_string() + " is not a monomial of the linearization");
}

int cmd_solve(const std::string& path, const std::string& lin_path, std::string engine) {
    PolynomialInstance poly = polynomial_from_json(read_json_file(path));
    const bool have_lin = !lin_path.empty();
    Json out;

    if (engine.empty()) {
        if (!have_lin) {
            MipVerdict v = has_intersection_property(poly.targets());
            if (!v.holds) {
                std::cerr << "intersection property violated (" << condition_name(*v.violated)
                          << "); L* is not integral, rerun with --engine brute or --engine lp\n";
                Json fail;
                fail["error"] = "intersection property violated";
                fail["violated"] = condition_name(*v.violated);
                emit(fail);
                return kFails;
            }
        }
        engine = "dp";
    }

    if (engine == "brute") {
        BruteResult r = brute_force_min(poly.n, poly.terms);
        Assignment y = r.y;
        for (int i = 1; i <= poly.n; ++i) y[Monomial::singleton(i)] = r.x[i - 1];
        out["engine"] = "brute";
        out["value"] = to_string(r.value);
        out["assignment"] = to_json(y);
        emit(out);
        std::cerr << "brute force minimum " << to_string(r.value) << "\n";
        return kOk;
    }

    Linearization lin = have_lin ? linearization_from_json(read_json_file(lin_path))
                                  : build_star(poly.targets(), poly.n);
    require_terms_in(poly, lin);

    if (engine == "dp") {
        if (!LinDigraph(lin).undirected_acyclic()) {
            std::cerr << "error: the dp engine needs an acyclic linearization; use --engine brute or lp\n";
            return kFails;
        }
        DpResult r = solve_acyclic(lin, poly.terms);
        out["engine"] = "dp";
        out["value"] = to_string(r.value);
        out["assignment"] = to_json(r.y);
        emit(out);
        std::cerr << "optimal value " << to_string(r.value) << "\n";
        return kOk;
    }

    // lp
    LpResult r = optimize_relaxation(lin, poly.terms);
    if (r.status != LpStatus::Optimal) throw Error("relaxation LP did not reach an optimum");
    auto targets = poly.targets();
    bool integral = decide_integral(lin, targets).integral;
    RationalPoint y;
    for (std::size_t v = 0; v < lin.monomials().size(); ++v) y[lin.monomials()[v]] = r.x[v];
    out["engine"] = "lp";
    out["value"] = to_string(r.value);
    out["assignment"] = to_json(y);
    out["integral"] = integral;
    out["bound_only"] = !integral;
    emit(out);
    std::cerr << (integral ? "optimal value " : "lower bound (relaxation not integral) ")
              << to_string(r.value) << "\n";
    return kOk;
}

int cmd_export_lp(const std::string& path, const std::string& output) {
    Json j = read_json_file(path);
    Linearization lin = is_linearization_json(j) ? linearization_from_json(j) : Linearization(1, {}, {});
    Objective obj;
    if (!is_linearization_json(j)) {
        PolynomialInstance poly = polynomial_from_json(j);
        lin = build_star(poly.targets(), poly.n);
        obj = poly.terms;
    } else {
        require_simple_valid(lin, "export-lp");
    }
    InequalitySystem sys = build_system(lin);
    export_lp(sys, obj, output);
    Json out;
    out["output"] = output;
    out["variables"] = sys.variables.size();
    out["rows"] = sys.rows.size();
    emit(out);
    std::cerr << "wrote " << sys.rows.size() << " rows to " << output << "\n";
    return kOk;
}

int cmd_tdi(int k, const std::vector<long long>& w, long long wbar) {
    if (static_cast<int>(w.size()) != k)
        throw InvalidInput("-k is " + std::to_string(k) + " but " + std::to_string(w.size()) + " weights were given");
    TdiCertificate c = tdi_single_and(w, wbar);
    emit(to_json(c));
    std::cerr << "case " << c.case_id << ", value " << c.primal_value << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linearizations of binary polynomial optimization problems"};
    app.require_subcommand(1);
    std::function<int()> run;

    std::string file, lin_path, targets, output, engine;
    bool flag = false;
    int k = 0;
    std::vector<long long> w;
    long long wbar = 0;

    auto* validate_cmd = app.add_subcommand("validate", "Check a linearization file");
    validate_cmd->add_option("lin", file, "Linearization JSON")->required();
    validate_cmd->add_flag("--require-simple", flag, "Also require one constraint per proper monomial");
    validate_cmd->callback([&] { run = [&] { return cmd_validate(file, flag); }; });

    auto* integral_cmd = app.add_subcommand("check-integral", "Decide integrality of the S+T projection");
    integral_cmd->add_option("lin", file, "Linearization JSON")->required();
    integral_cmd->add_option("--targets", targets, "Targets as '1,2;2,3' or a JSON file (default: all proper monomials)");
    integral_cmd->callback([&] { run = [&] { return cmd_check_integral(file, targets); }; });

    auto* mip_cmd = app.add_subcommand("check-mip", "Check the monomial intersection property");
    mip_cmd->add_option("poly", file, "Polynomial JSON")->required();
    mip_cmd->add_flag("--cross-check", flag, "Also evaluate (A')/(B') and compare");
    mip_cmd->callback([&] { run = [&] { return cmd_check_mip(file, flag); }; });

    auto* star_cmd = app.add_subcommand("build-star", "Write the canonical linearization L*");
    star_cmd->add_option("poly", file, "Polynomial JSON")->required();
    star_cmd->add_option("-o,--output", output, "Output linearization JSON")->required();
    star_cmd->callback([&] { run = [&] { return cmd_build_star(file, output); }; });

    auto* solve_cmd = app.add_subcommand("solve", "Minimize a polynomial");
    solve_cmd->add_option("poly", file, "Polynomial JSON")->required();
    solve_cmd->add_option("--lin", lin_path, "Use this linearization instead of L*");
    solve_cmd->add_option("--engine", engine, "dp, lp or brute")->check(CLI::IsMember({"dp", "lp", "brute"}));
    solve_cmd->callback([&] { run = [&] { return cmd_solve(file, lin_path, engine); }; });

    auto* export_cmd = app.add_subcommand("export-lp", "Write the relaxation in CPLEX LP format");
    export_cmd->add_option("input", file, "Polynomial or linearization JSON")->required();
    export_cmd->add_option("-o,--output", output, "Output .lp file")->required();
    export_cmd->callback([&] { run = [&] { return cmd_export_lp(file, output); }; });

    auto* tdi_cmd = app.add_subcommand("tdi-demo", "Primal/dual certificate for one AND constraint");
    tdi_cmd->add_option("-k", k, "Operand count")->required()->check(CLI::Range(2, 64));
    tdi_cmd->add_option("-w", w, "Operand weights, comma separated")->required()->delimiter(',');
    tdi_cmd->add_option("--wbar", wbar, "Resultant weight")->required();
    tdi_cmd->callback([&] { run = [&] { return cmd_tdi(k, w, wbar); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run();
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const StructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFails;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFails;
    }
}
