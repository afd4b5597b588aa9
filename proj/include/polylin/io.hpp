#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "polylin/dp_solver.hpp"
#include "polylin/integrality.hpp"
#include "polylin/linearization.hpp"
#include "polylin/mip.hpp"

namespace polylin {

using Json = nlohmann::ordered_json;

/// min sum a_m prod x_i; terms with a single variable carry linear costs.
struct PolynomialInstance {
    int n = 0;
    Objective terms;

    /// Monomials with at least two variables, sorted.
    std::vector<Monomial> targets() const;
};

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"n", "monomials", "constraints"}; singletons may be omitted.
Linearization linearization_from_json(const Json& j);
Json to_json(const Linearization& lin);

/// {"n", "terms": [{"vars", "coef"}]}; repeated monomials are summed.
PolynomialInstance polynomial_from_json(const Json& j);
Json to_json(const PolynomialInstance& poly);

/// True when the document looks like a linearization file.
bool is_linearization_json(const Json& j);

Monomial monomial_from_json(const Json& j);
Json to_json(const Monomial& m);

Json to_json(const Assignment& y);
Json to_json(const RationalPoint& y);
Json to_json(const BadCycle& cycle);
Json to_json(const FractionalCertificate& cert);
Json to_json(const TdiCertificate& cert);
Json to_json(const MipVerdict& verdict);
Json to_json(const ValidationReport& report);

} // namespace polylin
