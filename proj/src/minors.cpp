#include "powerful/minors.hpp"

namespace powerful {

namespace {

int check_element(int order, int e) {
  if (e < 1 || e > order)
    throw ElementOutOfRange("element " + std::to_string(e) +
                            " not in ground set of size " + std::to_string(order));
  return e - 1;
}

}  // namespace

Multiset contract(const Multiset& m, int e) {
  const int b = check_element(m.order(), e);
  const Indicator& f = m.indicator();
  Indicator g(m.order() - 1);
  for (Mask x = 0; x < g.table_size(); ++x) g.set(x, f[insert_bit(x, b)]);
  return Multiset(std::move(g));
}

SetSystem contract(const SetSystem& s, int e) {
  const int b = check_element(s.order(), e);
  const Mask eb = Mask{1} << b;
  std::vector<Mask> members;
  for (Mask m : s.members())
    if ((m & eb) == 0) members.push_back((m & (eb - 1)) | ((m >> (b + 1)) << b));
  return make_set_system(s.order() - 1, std::move(members));
}

Multiset delete_element(const Multiset& m, int e) {
  const int b = check_element(m.order(), e);
  const Indicator& f = m.indicator();
  Indicator g(m.order() - 1);
  for (Mask x = 0; x < g.table_size(); ++x) {
    const Mask base = insert_bit(x, b);
    g.set(x, checked_add(f[base], f[base | (Mask{1} << b)]));
  }
  return Multiset(std::move(g));
}

bool is_deletable(const SetSystem& s, int e) {
  check_element(s.order(), e);
  if (!is_powerful_set(s))
    throw NotPowerful("deletability is defined for powerful sets");
  return as_set(delete_element(Multiset::from_set(s), e)).has_value();
}

Multiset minor(const Multiset& m, const MinorSpec& spec) {
  if ((spec.contract & spec.del) != 0)
    throw OverlappingSpec("contract and delete masks overlap at " +
                          format_mask(spec.contract & spec.del));
  const Mask limit_mask = m.indicator().full_mask();
  if ((spec.contract | spec.del) & ~limit_mask)
    throw ElementOutOfRange("minor spec reaches outside the ground set");

  // Highest element first, so lower bit positions stay valid as the ground
  // set shrinks.
  Multiset cur = m;
  for (int b = m.order() - 1; b >= 0; --b) {
    const Mask eb = Mask{1} << b;
    if (spec.contract & eb)
      cur = contract(cur, b + 1);
    else if (spec.del & eb)
      cur = delete_element(cur, b + 1);
  }
  return cur;
}

}  // namespace powerful
