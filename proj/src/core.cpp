#include "powerful/core.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace powerful {

bool SetSystem::contains(Mask x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

Indicator SetSystem::indicator() const {
  Indicator f(n_);
  for (Mask m : members_) f.set(m, 1);
  return f;
}

Multiset Multiset::scaled(std::uint64_t alpha) const {
  Indicator g(order());
  for (Mask x = 0; x < f_.table_size(); ++x) {
    std::uint64_t v = f_[x];
    if (alpha != 0 && v > UINT64_MAX / alpha) throw Overflow("scale overflow");
    g.set(x, v * alpha);
  }
  return Multiset(std::move(g));
}

RankTable::RankTable(int n, std::vector<int> ranks) : n_(n), ranks_(std::move(ranks)) {
  if (ranks_.size() != (std::size_t{1} << n)) throw Error("rank table must have 2^n entries");
}

bool RankTable::all_integer() const {
  return std::all_of(ranks_.begin(), ranks_.end(),
                     [](int r) { return r != kNonInteger; });
}

SetSystem make_set_system(int n, std::vector<Mask> subsets) {
  if (n < 0 || n > kMaxGround)
    throw GroundTooLarge("ground-set size " + std::to_string(n) + " outside [0, 20]");
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (Mask m : subsets)
    if (m >= limit)
      throw OutOfRangeMask("subset " + format_mask(m) +
                           " outside ground set of size " + std::to_string(n));
  std::sort(subsets.begin(), subsets.end());
  auto dup = std::adjacent_find(subsets.begin(), subsets.end());
  if (dup != subsets.end())
    throw DuplicateMember("duplicate member " + format_mask(*dup));
  SetSystem s;
  s.n_ = n;
  s.members_ = std::move(subsets);
  return s;
}

bool is_powerful_set(const SetSystem& s) {
  const Indicator g = zeta_transform(s.indicator());
  for (Mask x = 0; x < g.table_size(); ++x)
    if (!is_power_of_two(g[x])) return false;
  return true;
}

RankTable rank_table(const Multiset& m) {
  const Indicator& f = m.indicator();
  if (f[0] == 0)
    throw EmptySetMissing("rank is undefined when f(∅) = 0");
  const Indicator g = zeta_transform(f);
  const Mask full = f.full_mask();
  const std::uint64_t z_empty = g[full];
  std::vector<int> ranks(f.table_size());
  for (Mask x = 0; x < f.table_size(); ++x) {
    const std::uint64_t zx = g[full ^ x];
    if (zx == 0 || z_empty % zx != 0) {
      ranks[x] = RankTable::kNonInteger;
      continue;
    }
    const std::uint64_t q = z_empty / zx;
    ranks[x] = is_power_of_two(q) ? log2_exact(q) : RankTable::kNonInteger;
  }
  return RankTable(f.order(), std::move(ranks));
}

RankTable rank_table(const SetSystem& s) { return rank_table(Multiset::from_set(s)); }

bool is_powerful_multiset(const Multiset& m) {
  if (m.indicator()[0] == 0)
    throw EmptySetMissing("powerfulness of a multiset needs f(∅) ≥ 1");
  return rank_table(m).all_integer();
}

Multiset normalize(const Multiset& m) {
  if (!is_powerful_multiset(m))
    throw NotPowerful("normalize requires a powerful multiset");
  const Indicator& f = m.indicator();
  const std::uint64_t d = f[0];
  Indicator g(f.order());
  for (Mask x = 0; x < f.table_size(); ++x) {
    if (f[x] % d != 0)
      throw DivisionFailure("f(∅) does not divide f(" + format_mask(x) + ")");
    g.set(x, f[x] / d);
  }
  return Multiset(std::move(g));
}

std::optional<SetSystem> as_set(const Multiset& m, Mask* offending) {
  const Multiset norm = normalize(m);
  const Indicator& f = norm.indicator();
  std::vector<Mask> members;
  for (Mask x = 0; x < f.table_size(); ++x) {
    if (f[x] > 1) {
      if (offending) *offending = x;
      return std::nullopt;
    }
    if (f[x] == 1) members.push_back(x);
  }
  return make_set_system(f.order(), std::move(members));
}

namespace {

Mask apply_perm(const std::vector<int>& perm, Mask x) {
  Mask y = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (x >> i & 1) y |= Mask{1} << perm[i];
  return y;
}

std::vector<int> sorted_singleton_ranks(const RankTable& rt) {
  std::vector<int> out;
  for (int i = 0; i < rt.order(); ++i) out.push_back(rt.at(Mask{1} << i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_isomorphic(const Multiset& a, const Multiset& b) {
  if (a.order() > 8 || b.order() > 8)
    throw GroundTooLarge("isomorphism search is capped at n = 8");
  if (!is_powerful_multiset(a) || !is_powerful_multiset(b))
    throw NotPowerful("isomorphism is defined for powerful multisets");
  if (a.order() != b.order()) return false;

  const Multiset na = normalize(a);
  const Multiset nb = normalize(b);
  const RankTable ra = rank_table(na);
  const RankTable rb = rank_table(nb);
  if (ra.rank_of_ground() != rb.rank_of_ground()) return false;
  if (sorted_singleton_ranks(ra) != sorted_singleton_ranks(rb)) return false;

  const Indicator& fa = na.indicator();
  const Indicator& fb = nb.indicator();
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (Mask x = 0; x < fa.table_size() && match; ++x)
      match = fa[x] == fb[apply_perm(perm, x)];
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace powerful
