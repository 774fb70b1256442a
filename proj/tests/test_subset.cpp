#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "powerful/reference.hpp"
#include "powerful/subset.hpp"

using namespace powerful;

namespace {

Indicator indicator_of(int n, std::initializer_list<Mask> members) {
  Indicator f(n);
  for (Mask m : members) f.add(m, 1);
  return f;
}

// The running example {∅,{1,3},{2,3},{1,2,3}}: masks 0, 5, 6, 7.
const Indicator kS1 = indicator_of(3, {0, 5, 6, 7});

Indicator random_indicator(int n, int max_value, std::mt19937_64& rng) {
  Indicator f(n);
  for (Mask x = 0; x < f.table_size(); ++x)
    f.set(x, rng() % (static_cast<std::uint64_t>(max_value) + 1));
  return f;
}

}  // namespace

TEST_CASE("power-of-two predicate") {
  CHECK(is_power_of_two(1));
  CHECK_FALSE(is_power_of_two(0));
  CHECK_FALSE(is_power_of_two(6));
  CHECK(is_power_of_two(std::uint64_t{1} << 40));
  CHECK(log2_exact(1) == 0);
  CHECK(log2_exact(16) == 4);
}

TEST_CASE("insert_bit re-expands compacted masks") {
  // Dropping bit 1 from 0b111 gives 0b11; re-inserting restores positions.
  CHECK(insert_bit(0b11, 1) == 0b101);
  CHECK(insert_bit(0b11, 0) == 0b110);
  CHECK(insert_bit(0b11, 2) == 0b011);
  CHECK(insert_bit(0, 0) == 0);
}

TEST_CASE("checked_add rejects wraparound") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(~std::uint64_t{0}, 1), Overflow);
}

TEST_CASE("Indicator construction and bounds") {
  Indicator f(2);
  CHECK(f.table_size() == 4);
  CHECK(f.full_mask() == 3);
  f.set(3, 7);
  CHECK(f.at(3) == 7);
  CHECK_THROWS_AS(f.at(4), OutOfRangeMask);
  CHECK_THROWS_AS(f.set(4, 1), OutOfRangeMask);
  CHECK_THROWS_AS(Indicator(21), GroundTooLarge);
  CHECK_THROWS_AS(Indicator(-1), GroundTooLarge);
  CHECK(Indicator(0).table_size() == 1);
}

TEST_CASE("zeta transform worked values") {
  SUBCASE("n=1 concentrated on the empty set") {
    Indicator f(1, {1, 0});
    const Indicator g = zeta_transform(f);
    CHECK(g[0] == 1);
    CHECK(g[1] == 1);
    CHECK(f[1] == 0);  // input untouched
  }
  SUBCASE("n=2 full power set") {
    Indicator f(2, {1, 1, 1, 1});
    const Indicator g = zeta_transform(f);
    CHECK(g.values() == std::vector<std::uint64_t>{1, 2, 2, 4});
  }
  SUBCASE("running example") {
    const Indicator g = zeta_transform(kS1);
    CHECK(g[7] == 4);
    CHECK(g[3] == 1);  // {1,2}
    CHECK(g[5] == 2);  // {1,3}
    CHECK(g[6] == 2);  // {2,3}
    for (Mask x : {0u, 1u, 2u, 4u}) CHECK(g[x] == 1);
  }
}

TEST_CASE("zeta transform agrees with the naive double loop") {
  std::mt19937_64 rng(20260823);
  for (int n = 0; n <= 4; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      const Indicator f = random_indicator(n, 3, rng);
      CHECK(zeta_transform(f) == reference::zeta_transform_naive(f));
    }
  }
}

TEST_CASE("zeta transform is linear") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const Indicator f = random_indicator(4, 5, rng);
    const Indicator h = random_indicator(4, 5, rng);
    Indicator sum(4);
    for (Mask x = 0; x < sum.table_size(); ++x) sum.set(x, f[x] + h[x]);
    const Indicator zf = zeta_transform(f);
    const Indicator zh = zeta_transform(h);
    const Indicator zs = zeta_transform(sum);
    for (Mask x = 0; x < sum.table_size(); ++x) CHECK(zs[x] == zf[x] + zh[x]);
  }
}

TEST_CASE("serial and parallel zeta agree") {
  std::mt19937_64 rng(99);
  const Indicator f = random_indicator(10, 7, rng);
  CHECK(zeta_transform_serial(f) == zeta_transform_parallel(f));
}

TEST_CASE("z_count worked values") {
  CHECK(z_count(kS1, 4) == 1);  // X={3}: only ∅ ⊆ {1,2}
  CHECK(z_count(kS1, 0) == kS1.total());
  Indicator full(3);
  for (Mask x = 0; x < full.table_size(); ++x) full.set(x, 1);
  for (Mask x = 0; x < full.table_size(); ++x)
    CHECK(z_count(full, x) ==
          (std::uint64_t{1} << (3 - std::popcount(x))));
  CHECK_THROWS_AS(z_count(kS1, 8), OutOfRangeMask);
}

TEST_CASE("z_count equals zeta at the complement") {
  std::mt19937_64 rng(5150);
  for (int n = 0; n <= 4; ++n) {
    const Indicator f = random_indicator(n, 3, rng);
    const Indicator g = zeta_transform(f);
    for (Mask x = 0; x < f.table_size(); ++x) {
      CHECK(z_count(f, x) == g[f.full_mask() ^ x]);
      CHECK(z_count(f, x) == reference::z_count_naive(f, x));
    }
  }
}

TEST_CASE("label conversions") {
  CHECK(mask_from_labels({1, 3}, 3) == 5);
  CHECK(mask_from_labels({}, 3) == 0);
  CHECK_THROWS_AS(mask_from_labels({4}, 3), ElementOutOfRange);
  CHECK_THROWS_AS(mask_from_labels({0}, 3), ElementOutOfRange);
  CHECK(labels_of(5) == std::vector<int>{1, 3});
  CHECK(format_mask(0) == "{}");
  CHECK(format_mask(6) == "{2,3}");
  CHECK(parse_label_list("1,3", 3) == 5);
  CHECK(parse_label_list("", 3) == 0);
  CHECK_THROWS_AS(parse_label_list("1,,3", 3), Error);
  CHECK_THROWS_AS(parse_label_list("a", 3), Error);
  CHECK_THROWS_AS(parse_label_list("9", 3), ElementOutOfRange);
}
