#include "polylin/monomial.hpp"

#include <algorithm>
#include <iterator>

#include "polylin/error.hpp"

namespace polylin {

Monomial::Monomial(std::vector<int> vars) : vars_(std::move(vars)) {
    if (vars_.empty()) throw InvalidInput("empty monomial");
    std::sort(vars_.begin(), vars_.end());
    if (vars_.front() < 1)
        throw InvalidInput("variable index " + std::to_string(vars_.front()) + " is not positive");
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
        throw InvalidInput("repeated variable in monomial");
}

Monomial::Monomial(std::initializer_list<int> vars) : Monomial(std::vector<int>(vars)) {}

bool Monomial::contains(int i) const {
    return std::binary_search(vars_.begin(), vars_.end(), i);
}

bool Monomial::is_subset_of(const Monomial& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

bool Monomial::is_proper_subset_of(const Monomial& other) const {
    return size() < other.size() && is_subset_of(other);
}

bool Monomial::intersects(const Monomial& other) const {
    auto a = vars_.begin();
    auto b = other.vars_.begin();
    while (a != vars_.end() && b != other.vars_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

Monomial Monomial::unite(const Monomial& other) const {
    std::vector<int> out;
    std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                   std::back_inserter(out));
    return Monomial(std::move(out));
}

std::optional<Monomial> Monomial::intersect(const Monomial& other) const {
    std::vector<int> out;
    std::set_intersection(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                          std::back_inserter(out));
    if (out.empty()) return std::nullopt;
    return Monomial(std::move(out));
}

std::string Monomial::key() const {
    std::string s;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += '_';
        s += std::to_string(vars_[i]);
    }
    return s;
}

std::string Monomial::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vars_[i]);
    }
    return s + "}";
}

Monomial monomial_from_key(const std::string& key) {
    std::vector<int> vars;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        auto next = key.find('_', pos);
        if (next == std::string::npos) next = key.size();
        auto part = key.substr(pos, next - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("bad monomial key '" + key + "'");
        vars.push_back(std::stoi(part));
        pos = next + 1;
    }
    return Monomial(std::move(vars));
}

Monomial unite_all(std::span<const Monomial> monomials) {
    if (monomials.empty()) throw InvalidInput("union of no monomials");
    std::vector<int> vars;
    for (const auto& m : monomials) vars.insert(vars.end(), m.vars().begin(), m.vars().end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return Monomial(std::move(vars));
}

void canonicalize(std::vector<Monomial>& monomials) {
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
}

} // namespace polylin
