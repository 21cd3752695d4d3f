#pragma once

#include <vector>

#include "nsplit/necklace.hpp"
#include "nsplit/splitter.hpp"

namespace nsplit {

/// Point-tuple enumeration visits the product of all color sizes.
inline constexpr long long kDefaultEnumerationLimit = 1'000'000;

/// Ground-truth enumeration: tries every choice of one point per color and
/// keeps the ones whose induced alternating labeling balances every color.
/// Deliberately shares no code with the component-guessing solver.
/// Deterministic lexicographic order over (sorted colors, point indices).
std::vector<Splitting> enumerate_solutions(const Necklace& nk,
                                           long long tuple_limit = kDefaultEnumerationLimit);

long long count_solutions(const Necklace& nk, long long tuple_limit = kDefaultEnumerationLimit);

}  // namespace nsplit
