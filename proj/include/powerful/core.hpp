#pragma once

#include <optional>
#include <vector>

#include "powerful/subset.hpp"

namespace powerful {

/// A collection of distinct subsets of a ground set. Members are kept sorted
/// by mask value.
class SetSystem {
 public:
  SetSystem() = default;

  int order() const { return n_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask x) const;
  Mask full_mask() const { return static_cast<Mask>((std::uint64_t{1} << n_) - 1); }

  Indicator indicator() const;

  bool operator==(const SetSystem&) const = default;

 private:
  friend SetSystem make_set_system(int n, std::vector<Mask> subsets);
  int n_ = 0;
  std::vector<Mask> members_;
};

/// A multiset of subsets, carried by its indicator function.
class Multiset {
 public:
  explicit Multiset(Indicator f) : f_(std::move(f)) {}
  static Multiset from_set(const SetSystem& s) { return Multiset(s.indicator()); }

  int order() const { return f_.order(); }
  const Indicator& indicator() const { return f_; }
  std::uint64_t total() const { return f_.total(); }

  Multiset scaled(std::uint64_t alpha) const;

  bool operator==(const Multiset&) const = default;

 private:
  Indicator f_;
};

/// Per-subset ranks. kNonInteger marks subsets whose z-ratio is not a power
/// of two (the system is then not powerful, but stays analyzable).
class RankTable {
 public:
  static constexpr int kNonInteger = -1;

  RankTable(int n, std::vector<int> ranks);

  int order() const { return n_; }
  Mask full_mask() const { return static_cast<Mask>((std::uint64_t{1} << n_) - 1); }
  int at(Mask x) const { return ranks_[x]; }
  bool is_integer(Mask x) const { return ranks_[x] != kNonInteger; }
  bool all_integer() const;
  int rank_of_ground() const { return ranks_[full_mask()]; }

  bool operator==(const RankTable&) const = default;

 private:
  int n_;
  std::vector<int> ranks_;
};

/// Sorts and validates; duplicate input masks are rejected (multisets go
/// through Multiset instead).
SetSystem make_set_system(int n, std::vector<Mask> subsets);

/// True iff |{Y ∈ S : Y ⊆ X}| is a power of two for every X ⊆ E.
/// One zeta transform plus 2^n power-of-two checks.
bool is_powerful_set(const SetSystem& s);

/// Rank of every subset: r(X) = log2(z_∅ / z_X) when the quotient is an exact
/// power of two, kNonInteger otherwise. Requires f(∅) ≥ 1.
RankTable rank_table(const Multiset& m);
RankTable rank_table(const SetSystem& s);

/// True iff every rank entry is an integer.
bool is_powerful_multiset(const Multiset& m);

/// Divides every entry by f(∅). Input must be powerful.
Multiset normalize(const Multiset& m);

/// Normalize, then convert when {0,1}-valued. On failure returns nullopt and
/// stores the first offending mask (smallest mask with multiplicity > 1)
/// through `offending` when given.
std::optional<SetSystem> as_set(const Multiset& m, Mask* offending = nullptr);

/// Isomorphism up to ground-set bijection and scalar. Both inputs must be
/// powerful; brute-force over permutations, n ≤ 8.
bool is_isomorphic(const Multiset& a, const Multiset& b);

}  // namespace powerful
