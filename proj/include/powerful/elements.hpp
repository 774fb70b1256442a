#pragma once

#include <optional>

#include "powerful/core.hpp"

namespace powerful {

/// Degenerate-status flags of one ground element. The kinds are not mutually
/// exclusive (an element can be frame and star at once).
struct ElementClass {
  int element = 0;
  bool is_loop = false;
  bool is_coloop = false;
  bool is_frame = false;
  bool is_star = false;
};

/// The ⊆-minimal nonempty members of a set system.
class CocircuitSet {
 public:
  CocircuitSet(int n, std::vector<Mask> cocircuits);

  int order() const { return n_; }
  const std::vector<Mask>& members() const { return cocircuits_; }

  bool operator==(const CocircuitSet&) const = default;

 private:
  int n_;
  std::vector<Mask> cocircuits_;
};

/// e appears in no member.
bool is_loop(const SetSystem& s, int e);

/// S = {X, X∪{e} : X ∈ T} for some T. On powerful systems this is decided by
/// the membership of {e} alone; non-powerful systems fall back to the
/// structural check.
bool is_coloop(const SetSystem& s, int e);

/// Every nonempty member contains e.
bool is_frame(const SetSystem& s, int e);

/// S = {X : X ∈ T} ∪ {X∪{e} : X ∉ T} for some T ⊆ 2^(E\{e}); equivalently
/// exactly one of X, X∪{e} is a member for every X avoiding e.
bool is_star(const SetSystem& s, int e);

ElementClass classify_element(const SetSystem& s, int e);

// The four single-element extensions. The new element must be labeled
// order+1; reusing an existing label is ElementAlreadyPresent.
SetSystem add_loop(const SetSystem& t, int e);
SetSystem add_coloop(const SetSystem& t, int e);
SetSystem add_frame(const SetSystem& t, int e);
SetSystem add_star(const SetSystem& t, int e);

/// {X ∪ Y : X ∈ S, Y ∈ T}; T's elements are relabeled to n_S+1 … n_S+n_T.
SetSystem direct_sum(const SetSystem& s, const SetSystem& t);

/// Indicator product across disjoint grounds, the multiset analogue.
Multiset direct_sum(const Multiset& a, const Multiset& b);

CocircuitSet cocircuits(const SetSystem& s);

/// The unique powerful set realizing C, found by exhaustive search (n ≤ 4);
/// nullopt when no powerful set has cocircuit set exactly C.
std::optional<SetSystem> from_cocircuits(const CocircuitSet& c, int n);

}  // namespace powerful
