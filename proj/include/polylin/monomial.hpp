#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polylin/rational.hpp"

namespace polylin {

/// A product of distinct binary variables, stored as its strictly increasing
/// 1-based index sequence. Ordering is lexicographic on that sequence, so
/// {1,2} < {1,2,3} < {1,3} < {2}.
class Monomial {
public:
    explicit Monomial(std::vector<int> vars);
    Monomial(std::initializer_list<int> vars);

    static Monomial singleton(int i) { return Monomial({i}); }

    std::span<const int> vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    bool is_singleton() const { return vars_.size() == 1; }
    int front() const { return vars_.front(); }
    int max_index() const { return vars_.back(); }

    bool contains(int i) const;
    bool is_subset_of(const Monomial& other) const;
    bool is_proper_subset_of(const Monomial& other) const;
    bool intersects(const Monomial& other) const;

    Monomial unite(const Monomial& other) const;
    std::optional<Monomial> intersect(const Monomial& other) const;

    /// Underscore-joined indices, "1_2_3"; used for LP variable names and
    /// JSON point keys.
    std::string key() const;
    /// "{1,2,3}"
    std::string to_string() const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> vars_;
};

/// Parses the key() form back ("1_2_3").
Monomial monomial_from_key(const std::string& key);

/// Union of a nonempty list of monomials.
Monomial unite_all(std::span<const Monomial> monomials);

/// Sorts and removes duplicates.
void canonicalize(std::vector<Monomial>& monomials);

using Assignment = std::map<Monomial, int>;
using RationalPoint = std::map<Monomial, Rational>;
/// Coefficients a_m; singleton keys carry linear costs.
using Objective = std::map<Monomial, Rational>;

} // namespace polylin
