#pragma once

#include <span>

#include "polylin/linearization.hpp"

namespace polylin {

/// Removes the proper monomial m and its constraint c*; every constraint that
/// used m as an operand gets the operands of c* instead.
Linearization eliminate_monomial(const Linearization& lin, const Monomial& m);

/// Restricts L to S and succ(T), keeping the constraints whose resultant
/// survives.
Linearization preprocess(const Linearization& lin, std::span<const Monomial> targets);

} // namespace polylin
