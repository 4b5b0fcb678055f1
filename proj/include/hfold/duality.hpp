#pragma once

#include "hfold/counting.hpp"
#include "hfold/structure.hpp"

namespace hfold {

/// A* = a_max - A, sorted ascending. An involution that preserves a_max and gcd.
NormalizedSet dual_set(const NormalizedSet& set);

/// { h*a_max - n : n in S } for a threshold sumset of A, expressed as a sumset of A*.
ThresholdSumset reflect(const ThresholdSumset& sumset);

/// ((hA)^(t))* == (hA*)^(t).
bool check_duality(const NormalizedSet& set, Integer h, std::uint32_t t);

/// Fringe of A* obtained from the fringe of A by swapping (C_t, c_t) with (D_t, d_t).
FringeStructure dual_fringes(const FringeStructure& fringe);

} // namespace hfold
