#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>

#include "powerful/elements.hpp"
#include "powerful/enumerate.hpp"

using namespace powerful;

namespace {

const SetSystem kS1 = make_set_system(3, {0, 5, 6, 7});
const SetSystem kS2 = make_set_system(4, {0, 11, 13, 14});

SetSystem full_power_set(int n) {
  std::vector<Mask> all;
  for (Mask x = 0; x < (Mask{1} << n); ++x) all.push_back(x);
  return make_set_system(n, std::move(all));
}

// Relabels elements a <-> b in every member.
SetSystem swap_labels(const SetSystem& s, int a, int b) {
  std::vector<Mask> out;
  for (Mask m : s.members()) {
    const Mask ba = Mask{1} << (a - 1), bb = Mask{1} << (b - 1);
    Mask r = m & ~(ba | bb);
    if (m & ba) r |= bb;
    if (m & bb) r |= ba;
    out.push_back(r);
  }
  return make_set_system(s.order(), std::move(out));
}

}  // namespace

TEST_CASE("is_loop") {
  CHECK(is_loop(make_set_system(1, {0}), 1));
  CHECK_FALSE(is_loop(kS1, 1));
  for (int e = 1; e <= 3; ++e) CHECK_FALSE(is_loop(full_power_set(3), e));
  CHECK_THROWS_AS(is_loop(kS1, 4), ElementOutOfRange);
}

TEST_CASE("is_coloop") {
  CHECK(is_coloop(make_set_system(1, {0, 1}), 1));
  CHECK_FALSE(is_coloop(kS1, 3));
  for (int e = 1; e <= 4; ++e) CHECK_FALSE(is_coloop(kS2, e));
  // Non-powerful systems fall back to the structural definition.
  const SetSystem np = make_set_system(2, {0, 1, 2});
  CHECK_FALSE(is_coloop(np, 1));
  CHECK(is_coloop(make_set_system(2, {0, 2, 1, 3}), 1));
}

TEST_CASE("is_frame") {
  CHECK(is_frame(kS1, 3));
  CHECK_FALSE(is_frame(kS1, 1));
  CHECK(is_frame(make_set_system(1, {0}), 1));  // vacuous
}

TEST_CASE("is_star") {
  CHECK(is_star(kS1, 3));
  // 2^E has r(X) = |X| everywhere, yet admits no star decomposition: a star
  // forces |S| = 2^(n-1). The structural definition is authoritative.
  for (int n = 1; n <= 3; ++n)
    for (int e = 1; e <= n; ++e) CHECK_FALSE(is_star(full_power_set(n), e));
  // {∅,{1}} over ground {1,2}: element 2 is a star (T = 2^{1}), 1 is not.
  const SetSystem s = make_set_system(2, {0, 1});
  CHECK(is_star(s, 2));
  CHECK_FALSE(is_star(s, 1));
}

TEST_CASE("classify_element") {
  const ElementClass c3 = classify_element(kS1, 3);
  CHECK(c3.element == 3);
  CHECK(c3.is_frame);
  CHECK(c3.is_star);
  CHECK_FALSE(c3.is_loop);
  CHECK_FALSE(c3.is_coloop);
  const ElementClass c1 = classify_element(kS1, 1);
  CHECK_FALSE(c1.is_frame);
  CHECK_FALSE(c1.is_star);
}

TEST_CASE("extensions") {
  CHECK(add_frame(full_power_set(2), 3) == kS1);
  CHECK(add_coloop(make_set_system(0, {0}), 1) == make_set_system(1, {0, 1}));
  CHECK(add_loop(make_set_system(0, {0}), 1) == make_set_system(1, {0}));
  // add_star on T = {∅}: the only X is ∅ ∈ T, so the result is {∅} again.
  CHECK(add_star(make_set_system(0, {0}), 1) == make_set_system(1, {0}));
  // add_star on T = 2^{1}: both X stay, nothing gains the new element.
  CHECK(add_star(make_set_system(1, {0, 1}), 2) == make_set_system(2, {0, 1}));
  // T = {∅} over {1}: ∅ stays, {1} ∉ T becomes {1,2}.
  CHECK(add_star(make_set_system(1, {0}), 2) == make_set_system(2, {0, 3}));
  CHECK_THROWS_AS(add_loop(kS1, 2), ElementAlreadyPresent);
  CHECK_THROWS_AS(add_star(kS1, 5), ElementOutOfRange);
}

TEST_CASE("extension soundness, exhaustive for n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const std::uint64_t candidates = std::uint64_t{1} << ((1 << n) - 1);
    for (std::uint64_t c = 0; c < candidates; ++c) {
      std::vector<Mask> members{0};
      for (int m = 1; m < (1 << n); ++m)
        if (c >> (m - 1) & 1) members.push_back(static_cast<Mask>(m));
      const SetSystem t = make_set_system(n, std::move(members));
      const bool tp = is_powerful_set(t);
      CHECK(is_powerful_set(add_loop(t, n + 1)) == tp);
      CHECK(is_powerful_set(add_coloop(t, n + 1)) == tp);
      CHECK(is_powerful_set(add_frame(t, n + 1)) == tp);
      CHECK(is_powerful_set(add_star(t, n + 1)) == tp);
    }
  }
}

TEST_CASE("star and coloop extensions commute up to relabeling") {
  for (int n = 0; n <= 3; ++n) {
    for (const SetSystem& t : enumerate_powerful(n)) {
      const SetSystem left = add_coloop(add_star(t, n + 1), n + 2);
      const SetSystem right = add_star(add_coloop(t, n + 1), n + 2);
      CHECK(left == swap_labels(right, n + 1, n + 2));
    }
  }
}

TEST_CASE("direct_sum") {
  const SetSystem coloop1 = make_set_system(1, {0, 1});
  CHECK(direct_sum(coloop1, coloop1) == full_power_set(2));
  CHECK(direct_sum(kS1, make_set_system(1, {0})) == add_loop(kS1, 4));
  CHECK(direct_sum(kS1, coloop1) == add_coloop(kS1, 4));
  CHECK(direct_sum(kS1, coloop1).size() == kS1.size() * 2);
  // Multiset form multiplies indicators.
  const Multiset ms =
      direct_sum(Multiset::from_set(kS1).scaled(2), Multiset::from_set(coloop1));
  CHECK(ms.order() == 4);
  CHECK(ms.indicator()[5] == 2);       // {1,3}
  CHECK(ms.indicator()[5 | 8] == 2);   // {1,3,4}
}

TEST_CASE("direct-sum rank additivity") {
  for (const SetSystem& s : enumerate_powerful(2)) {
    for (const SetSystem& t : enumerate_powerful(3)) {
      const SetSystem ds = direct_sum(s, t);
      const RankTable rs = rank_table(s), rt = rank_table(t),
                      rd = rank_table(ds);
      for (Mask x = 0; x <= s.full_mask(); ++x)
        for (Mask y = 0; y <= t.full_mask(); ++y)
          CHECK(rd.at(x | (y << 2)) == rs.at(x) + rt.at(y));
    }
  }
}

TEST_CASE("cocircuits") {
  const SetSystem cycle = make_set_system(3, {0, 3, 5, 6});
  CHECK(cocircuits(cycle).members() == std::vector<Mask>{3, 5, 6});
  CHECK(cocircuits(make_set_system(2, {0})).members().empty());
  CHECK(cocircuits(kS1).members() == std::vector<Mask>{5, 6});
}

TEST_CASE("from_cocircuits") {
  const SetSystem cycle = make_set_system(3, {0, 3, 5, 6});
  CHECK(from_cocircuits(CocircuitSet(3, {3, 5, 6}), 3) == cycle);
  CHECK(from_cocircuits(CocircuitSet(2, {}), 2) == make_set_system(2, {0}));
  CHECK(from_cocircuits(CocircuitSet(1, {1}), 1) == make_set_system(1, {0, 1}));
  // Inversion really inverts: every enumerated system is recovered from its
  // own cocircuit set.
  for (int n = 0; n <= 3; ++n)
    for (const SetSystem& s : enumerate_powerful(n))
      CHECK(from_cocircuits(cocircuits(s), n) == s);
  CHECK_THROWS_AS(from_cocircuits(CocircuitSet(5, {1}), 5), GroundTooLarge);
}

TEST_CASE("CocircuitSet validation") {
  CHECK_THROWS_AS(CocircuitSet(3, {0}), Error);     // ∅ excluded
  CHECK_THROWS_AS(CocircuitSet(3, {1, 3}), Error);  // comparable pair
  CHECK(CocircuitSet(3, {5, 3}).members() == std::vector<Mask>{3, 5});
}
