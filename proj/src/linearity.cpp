#include "powerful/linearity.hpp"

#include <algorithm>
#include <bit>

namespace powerful {

namespace {

constexpr std::size_t kPairwiseLimit = std::size_t{1} << 12;

void require_empty_member(const SetSystem& s) {
  if (!s.contains(0))
    throw EmptySystem("the system must contain the empty set");
}

// GF(2) row-echelon basis of the members.
std::vector<Mask> gf2_basis(const std::vector<Mask>& members) {
  std::vector<Mask> basis;
  for (Mask m : members) {
    Mask v = m;
    for (Mask b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.begin(), basis.end(), std::greater<>());
    }
  }
  return basis;
}

std::optional<std::pair<Mask, Mask>> find_xor_violation(const SetSystem& s) {
  const auto& mem = s.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i; j < mem.size(); ++j)
      if (!s.contains(mem[i] ^ mem[j])) return std::make_pair(mem[i], mem[j]);
  return std::nullopt;
}

}  // namespace

LinearCheck is_linear(const SetSystem& s) {
  require_empty_member(s);
  LinearCheck out;
  if (s.size() <= kPairwiseLimit) {
    out.witness = find_xor_violation(s);
    out.linear = !out.witness.has_value();
    return out;
  }
  const auto basis = gf2_basis(s.members());
  if (s.size() == (std::uint64_t{1} << basis.size())) {
    // S spans a space of its own size, so it is the span.
    out.linear = true;
    return out;
  }
  out.witness = find_xor_violation(s);
  out.linear = false;
  return out;
}

SubcardinalCheck is_subcardinal(const RankTable& rt) {
  SubcardinalCheck out;
  Mask best = 0;
  bool found = false;
  const Mask table = static_cast<Mask>(std::uint64_t{1} << rt.order());
  for (Mask x = 0; x < table; ++x) {
    if (!rt.is_integer(x))
      throw NonIntegerRank("subcardinality needs an integer-valued rank table");
    if (rt.at(x) > static_cast<int>(std::popcount(x))) {
      if (!found || std::popcount(x) < std::popcount(best)) {
        best = x;
        found = true;
      }
    }
  }
  out.subcardinal = !found;
  if (found) out.witness = best;
  return out;
}

SetSystem xor_span(const SetSystem& s) {
  require_empty_member(s);
  const auto basis = gf2_basis(s.members());
  std::vector<Mask> members;
  members.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t key = 0; key < (std::uint64_t{1} << basis.size()); ++key) {
    Mask v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (key >> i & 1) v ^= basis[i];
    members.push_back(v);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return make_set_system(s.order(), std::move(members));
}

LinearityReport linearity_report(const SetSystem& s) {
  LinearityReport r;
  r.linear = is_linear(s);
  r.subcardinal = is_subcardinal(rank_table(s));
  return r;
}

}  // namespace powerful
