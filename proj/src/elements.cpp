#include "powerful/elements.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "powerful/enumerate.hpp"

namespace powerful {

namespace {

Mask element_bit(const SetSystem& s, int e) {
  if (e < 1 || e > s.order())
    throw ElementOutOfRange("element " + std::to_string(e) +
                            " not in ground set of size " + std::to_string(s.order()));
  return Mask{1} << (e - 1);
}

bool is_coloop_structural(const SetSystem& s, Mask eb) {
  // X and X∪{e} must appear in pairs.
  const Mask rest = s.full_mask() ^ eb;
  Mask x = 0;
  for (;;) {
    if (s.contains(x) != s.contains(x | eb)) return false;
    if (x == rest) break;
    x = (x - rest) & rest;  // next submask of rest in increasing order
  }
  return true;
}

bool is_star_structural(const SetSystem& s, Mask eb) {
  const Mask rest = s.full_mask() ^ eb;
  Mask x = 0;
  for (;;) {
    if (s.contains(x) == s.contains(x | eb)) return false;
    if (x == rest) break;
    x = (x - rest) & rest;
  }
  return true;
}

}  // namespace

CocircuitSet::CocircuitSet(int n, std::vector<Mask> cocircuits)
    : n_(n), cocircuits_(std::move(cocircuits)) {
  if (n < 0 || n > kMaxGround) throw GroundTooLarge("ground-set size outside [0, 20]");
  std::sort(cocircuits_.begin(), cocircuits_.end());
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (Mask m : cocircuits_) {
    if (m == 0) throw Error("cocircuits are nonempty by definition");
    if (m >= limit) throw OutOfRangeMask("cocircuit outside ground set");
  }
  if (std::adjacent_find(cocircuits_.begin(), cocircuits_.end()) != cocircuits_.end())
    throw DuplicateMember("duplicate cocircuit");
  for (std::size_t i = 0; i < cocircuits_.size(); ++i)
    for (std::size_t j = 0; j < cocircuits_.size(); ++j)
      if (i != j && (cocircuits_[i] & ~cocircuits_[j]) == 0)
        throw Error("cocircuits must be pairwise incomparable");
}

bool is_loop(const SetSystem& s, int e) {
  const Mask eb = element_bit(s, e);
  return std::none_of(s.members().begin(), s.members().end(),
                      [eb](Mask m) { return (m & eb) != 0; });
}

bool is_coloop(const SetSystem& s, int e) {
  const Mask eb = element_bit(s, e);
  if (is_powerful_set(s)) {
    const bool fast = s.contains(eb);
    assert(fast == is_coloop_structural(s, eb));
    return fast;
  }
  return is_coloop_structural(s, eb);
}

bool is_frame(const SetSystem& s, int e) {
  const Mask eb = element_bit(s, e);
  return std::all_of(s.members().begin(), s.members().end(),
                     [eb](Mask m) { return m == 0 || (m & eb) != 0; });
}

bool is_star(const SetSystem& s, int e) {
  const Mask eb = element_bit(s, e);
  const bool structural = is_star_structural(s, eb);
#ifndef NDEBUG
  // On powerful systems the structural form must agree with the rank form
  // r(X) = |X| for all X avoiding e, restricted to |S| = 2^(n-1).
  if (s.order() <= 6 && is_powerful_set(s)) {
    const RankTable rt = rank_table(s);
    bool rank_form = true;
    const Mask rest = s.full_mask() ^ eb;
    Mask x = 0;
    for (;;) {
      if (rt.at(x) != static_cast<int>(std::popcount(x))) rank_form = false;
      if (x == rest) break;
      x = (x - rest) & rest;
    }
    const bool expected =
        rank_form && s.size() == (std::uint64_t{1} << (s.order() - 1));
    assert(structural == expected);
  }
#endif
  return structural;
}

ElementClass classify_element(const SetSystem& s, int e) {
  ElementClass c;
  c.element = e;
  c.is_loop = is_loop(s, e);
  c.is_coloop = is_coloop(s, e);
  c.is_frame = is_frame(s, e);
  c.is_star = is_star(s, e);
  return c;
}

namespace {

Mask check_new_element(const SetSystem& t, int e) {
  if (e >= 1 && e <= t.order())
    throw ElementAlreadyPresent("element " + std::to_string(e) +
                                " is already in the ground set");
  if (e != t.order() + 1)
    throw ElementOutOfRange("new element must be labeled " +
                            std::to_string(t.order() + 1));
  if (t.order() + 1 > kMaxGround) throw GroundTooLarge("extension exceeds n = 20");
  return Mask{1} << t.order();
}

}  // namespace

SetSystem add_loop(const SetSystem& t, int e) {
  check_new_element(t, e);
  return make_set_system(t.order() + 1, t.members());
}

SetSystem add_coloop(const SetSystem& t, int e) {
  const Mask eb = check_new_element(t, e);
  std::vector<Mask> members;
  for (Mask m : t.members()) {
    members.push_back(m);
    members.push_back(m | eb);
  }
  return make_set_system(t.order() + 1, std::move(members));
}

SetSystem add_frame(const SetSystem& t, int e) {
  const Mask eb = check_new_element(t, e);
  std::vector<Mask> members{0};
  for (Mask m : t.members())
    if (m != 0) members.push_back(m | eb);
  return make_set_system(t.order() + 1, std::move(members));
}

SetSystem add_star(const SetSystem& t, int e) {
  const Mask eb = check_new_element(t, e);
  std::vector<Mask> members;
  const Mask table = static_cast<Mask>(std::uint64_t{1} << t.order());
  for (Mask x = 0; x < table; ++x)
    members.push_back(t.contains(x) ? x : (x | eb));
  return make_set_system(t.order() + 1, std::move(members));
}

SetSystem direct_sum(const SetSystem& s, const SetSystem& t) {
  if (s.order() + t.order() > kMaxGround)
    throw GroundTooLarge("direct sum exceeds n = 20");
  std::vector<Mask> members;
  members.reserve(s.size() * t.size());
  for (Mask y : t.members())
    for (Mask x : s.members()) members.push_back(x | (y << s.order()));
  return make_set_system(s.order() + t.order(), std::move(members));
}

Multiset direct_sum(const Multiset& a, const Multiset& b) {
  if (a.order() + b.order() > kMaxGround)
    throw GroundTooLarge("direct sum exceeds n = 20");
  const Indicator& fa = a.indicator();
  const Indicator& fb = b.indicator();
  Indicator g(a.order() + b.order());
  for (Mask y = 0; y < fb.table_size(); ++y) {
    for (Mask x = 0; x < fa.table_size(); ++x) {
      const std::uint64_t va = fa[x];
      const std::uint64_t vb = fb[y];
      if (va != 0 && vb > UINT64_MAX / va) throw Overflow("direct-sum overflow");
      g.set(x | (y << a.order()), va * vb);
    }
  }
  return Multiset(std::move(g));
}

CocircuitSet cocircuits(const SetSystem& s) {
  std::vector<Mask> mins;
  for (Mask m : s.members()) {
    if (m == 0) continue;
    bool minimal = true;
    for (Mask other : s.members()) {
      if (other == 0 || other == m) continue;
      if ((other & ~m) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) mins.push_back(m);
  }
  return CocircuitSet(s.order(), std::move(mins));
}

std::optional<SetSystem> from_cocircuits(const CocircuitSet& c, int n) {
  if (n < 0 || n > 4) throw GroundTooLarge("cocircuit inversion is capped at n = 4");
  if (c.order() != n) throw Error("cocircuit set order does not match n");
  for (const SetSystem& s : enumerate_powerful(n))
    if (cocircuits(s) == c) return s;
  return std::nullopt;
}

}  // namespace powerful
