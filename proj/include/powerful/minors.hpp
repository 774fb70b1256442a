#pragma once

#include "powerful/core.hpp"

namespace powerful {

/// A batch of contractions and deletions, as masks over the current ground
/// set. The two masks must be disjoint.
struct MinorSpec {
  Mask contract = 0;
  Mask del = 0;
};

/// S/e: drop every member containing e, shrink the ground set. Surviving
/// elements are compacted (bit b+1 becomes bit b for b ≥ e-1).
Multiset contract(const Multiset& m, int e);
SetSystem contract(const SetSystem& s, int e);

/// S\e: merge f(X) and f(X∪{e}) into one entry. Total mass is preserved;
/// the result is a multiset even when the input is a set.
Multiset delete_element(const Multiset& m, int e);

/// True iff S\e is (isomorphic to) a powerful set, i.e. the normalized merged
/// indicator is {0,1}-valued. Requires a powerful input.
bool is_deletable(const SetSystem& s, int e);

/// Applies every contraction, then every deletion. The result does not
/// depend on the interleaving order.
Multiset minor(const Multiset& m, const MinorSpec& spec);

}  // namespace powerful
