#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polylin/monomial.hpp"

namespace polylin {

enum class Condition { A, B, APrime, BPrime };

const char* condition_name(Condition c);

/// For the raw checks, holds means the condition is satisfied and a witness
/// is attached. For has_intersection_property, holds means the property
/// holds; otherwise violated names the condition and the witness is its.
struct MipVerdict {
    bool holds = false;
    std::optional<Condition> violated;
    std::vector<Monomial> witness_monomials;
    std::vector<int> witness_indices;
};

/// (A): pairwise different m1, m2, m3 with a common element such that
/// m3 n (m1 u m2) strictly contains both m3 n m1 and m3 n m2.
MipVerdict check_A(std::span<const Monomial> targets);

/// (B): a cycle m_1..m_k, k >= 3, in which exactly the cyclically adjacent
/// monomials intersect and no element is shared by all of them.
MipVerdict check_B(std::span<const Monomial> targets);

MipVerdict has_intersection_property(std::span<const Monomial> targets);

/// (A'): distinct indices i1, i2, i3 whose restrictions {t n {i1,i2,i3}}
/// contain {i1,i3}, {i2,i3} and {i1,i2,i3}.
MipVerdict check_A_prime(std::span<const Monomial> targets, int n);

/// (B'): a cycle of pairwise different m_1..m_k, k >= 3, and distinct
/// i_j in m_j n m_{j+1} lying in no other monomial of the cycle.
MipVerdict check_B_prime(std::span<const Monomial> targets, int n);

} // namespace polylin
