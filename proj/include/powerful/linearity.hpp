#pragma once

#include <optional>
#include <utility>

#include "powerful/core.hpp"

namespace powerful {

struct LinearCheck {
  bool linear = false;
  /// A pair X, Y ∈ S with X △ Y ∉ S, when not linear.
  std::optional<std::pair<Mask, Mask>> witness;
};

struct SubcardinalCheck {
  bool subcardinal = false;
  /// A minimal-cardinality subset with r(X) > |X|, when not subcardinal.
  std::optional<Mask> witness;
};

/// The combined §-style verdict used by reporting; for powerful inputs the
/// two booleans always agree.
struct LinearityReport {
  LinearCheck linear;
  SubcardinalCheck subcardinal;
};

/// Closure under symmetric difference (S is then a binary linear code).
/// Pairwise test for small systems, a GF(2) basis dimension count for large
/// ones. Requires ∅ ∈ S.
LinearCheck is_linear(const SetSystem& s);

/// r(X) ≤ |X| everywhere. All entries must be integers.
SubcardinalCheck is_subcardinal(const RankTable& rt);

/// Smallest symmetric-difference-closed superset of S.
SetSystem xor_span(const SetSystem& s);

LinearityReport linearity_report(const SetSystem& s);

}  // namespace powerful
