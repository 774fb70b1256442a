#pragma once

#include <vector>

#include "powerful/core.hpp"

namespace powerful::reference {

// Definition-level implementations, deliberately naive. They are the oracles
// the fast paths are tested against and stay independent of those paths.

/// O(4^n) double loop over (W, Y) pairs.
Indicator zeta_transform_naive(const Indicator& f);

/// |{Y ∈ S : Y ⊆ X}| by scanning the member list.
std::uint64_t count_subsets_in(const SetSystem& s, Mask x);

/// Σ_{Y ⊆ E\X} f(Y) by scanning the whole table.
std::uint64_t z_count_naive(const Indicator& f, Mask x);

/// Power-of-two check of count_subsets_in at every X.
bool is_powerful_naive(const SetSystem& s);

/// All powerful sets of order n, by testing every ∅-containing candidate.
/// Candidates number 2^(2^n - 1); usable for n ≤ 4.
std::vector<SetSystem> enumerate_naive(int n);

}  // namespace powerful::reference
