#include "powerful/reference.hpp"

namespace powerful::reference {

Indicator zeta_transform_naive(const Indicator& f) {
  Indicator g(f.order());
  for (Mask w = 0; w < f.table_size(); ++w) {
    std::uint64_t s = 0;
    for (Mask y = 0; y < f.table_size(); ++y)
      if ((y & ~w) == 0) s = checked_add(s, f[y]);
    g.set(w, s);
  }
  return g;
}

std::uint64_t count_subsets_in(const SetSystem& s, Mask x) {
  std::uint64_t c = 0;
  for (Mask m : s.members())
    if ((m & ~x) == 0) ++c;
  return c;
}

std::uint64_t z_count_naive(const Indicator& f, Mask x) {
  std::uint64_t s = 0;
  for (Mask y = 0; y < f.table_size(); ++y)
    if ((y & x) == 0) s = checked_add(s, f[y]);
  return s;
}

bool is_powerful_naive(const SetSystem& s) {
  const Mask full = s.full_mask();
  for (Mask x = 0;; ++x) {
    if (!is_power_of_two(count_subsets_in(s, x))) return false;
    if (x == full) break;
  }
  return true;
}

std::vector<SetSystem> enumerate_naive(int n) {
  if (n < 0 || n > 4) throw GroundTooLarge("naive enumeration is capped at n = 4");
  const Mask table = static_cast<Mask>(std::uint64_t{1} << n);
  const std::uint64_t candidates = std::uint64_t{1} << (table - 1);
  std::vector<SetSystem> out;
  for (std::uint64_t key = 0; key < candidates; ++key) {
    std::vector<Mask> members{0};  // ∅ forced in
    for (Mask m = 1; m < table; ++m)
      if (key >> (m - 1) & 1) members.push_back(m);
    SetSystem s = make_set_system(n, std::move(members));
    if (is_powerful_naive(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace powerful::reference
