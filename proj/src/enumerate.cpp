#include "powerful/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "powerful/elements.hpp"
#include "powerful/linearity.hpp"
#include "powerful/minors.hpp"
#include "powerful/reference.hpp"

namespace powerful {

namespace {

// A whole candidate system lives in one 64-bit key: bit W set iff the subset
// with mask W is a member. Works for n ≤ 5 (2^5 = 32 subset slots).
using Key = std::uint64_t;

constexpr int kEnumCap = 5;

struct SearchCtx {
  int n = 0;
  Mask table = 0;  // number of subset slots, 2^n
  std::vector<Key> subsets_of;  // subsets_of[W]: key bits of all Y ⊆ W
  Key forced_in = 0;
  Key forced_out = 0;
  int max_members_log = -1;  // from the rank filter, -1 = unconstrained
};

std::vector<Key> build_subsets_table(Mask table) {
  std::vector<Key> sm(table);
  sm[0] = 1;
  for (Mask w = 1; w < table; ++w) {
    const int i = std::countr_zero(w);
    const Key base = sm[w ^ (Mask{1} << i)];
    sm[w] = base | (base << (Mask{1} << i));
  }
  return sm;
}

// Membership of subsets is decided in increasing mask order, so when slot W
// is decided every Y ⊂ W is already fixed and the downward count
// |{Y ∈ S : Y ⊆ W}| is final. Any non-power-of-two count kills the branch.
void dfs(const SearchCtx& ctx, Mask w, Key key, std::vector<Key>& out) {
  if (w == ctx.table) {
    if (ctx.max_members_log >= 0 &&
        std::popcount(key) != (1 << ctx.max_members_log))
      return;
    out.push_back(key);
    return;
  }
  const int remaining = static_cast<int>(ctx.table - w);
  for (int choice = 0; choice <= 1; ++choice) {
    if (choice == 0 && (ctx.forced_in >> w & 1)) continue;
    if (choice == 1 && (ctx.forced_out >> w & 1)) continue;
    const Key next = key | (static_cast<Key>(choice) << w);
    const int members = std::popcount(next);
    if (ctx.max_members_log >= 0) {
      if (members > (1 << ctx.max_members_log)) continue;
      if (members + remaining - 1 < (1 << ctx.max_members_log)) continue;
    }
    if (!is_power_of_two(static_cast<std::uint64_t>(
            std::popcount(next & ctx.subsets_of[w]))))
      continue;
    dfs(ctx, w + 1, next, out);
  }
}

SetSystem system_from_key(int n, Key key) {
  std::vector<Mask> members;
  const Mask table = static_cast<Mask>(std::uint64_t{1} << n);
  for (Mask w = 0; w < table; ++w)
    if (key >> w & 1) members.push_back(w);
  return make_set_system(n, std::move(members));
}

std::vector<Key> run_search(const SearchCtx& ctx, bool parallel) {
  std::vector<Key> keys;
  if (ctx.forced_out & 1) return keys;  // ∅ is always a member
  constexpr Mask kSplitDepth = 11;
  if (!parallel || ctx.table <= kSplitDepth) {
    dfs(ctx, 1, 1, keys);
  } else {
    // Partition the tree on the membership pattern of the first slots; each
    // partition is independent and the final sort restores a fixed order.
    std::vector<Key> prefixes;
    {
      SearchCtx head = ctx;
      head.table = kSplitDepth;
      const int saved = head.max_members_log;
      head.max_members_log = -1;
      // Partial prefixes must still respect the member cap.
      dfs(head, 1, 1, prefixes);
      if (saved >= 0) {
        std::erase_if(prefixes, [saved](Key k) {
          return std::popcount(k) > (1 << saved);
        });
      }
    }
    std::vector<std::vector<Key>> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(prefixes.size()); ++i)
      dfs(ctx, kSplitDepth, prefixes[i], parts[i]);
    for (auto& p : parts) keys.insert(keys.end(), p.begin(), p.end());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Cache of unfiltered and rank-filtered enumerations, keyed by (n, rank).
std::map<std::pair<int, int>, std::vector<Key>>& key_cache() {
  static std::map<std::pair<int, int>, std::vector<Key>> cache;
  return cache;
}
std::mutex cache_mutex;

std::vector<Key> enumerate_keys(int n, const EnumFilter& filter, bool parallel) {
  const Mask table = static_cast<Mask>(std::uint64_t{1} << n);
  const bool cacheable = filter.must_contain.empty() && filter.must_avoid.empty();
  const int rank_key = filter.rank.value_or(-1);
  if (cacheable) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = key_cache().find({n, rank_key});
    if (it != key_cache().end()) return it->second;
  }

  SearchCtx ctx;
  ctx.n = n;
  ctx.table = table;
  ctx.subsets_of = build_subsets_table(table);
  if (filter.rank) {
    if (*filter.rank < 0 || *filter.rank > n)
      throw Error("rank filter outside [0, n]");
    ctx.max_members_log = *filter.rank;
  }
  for (Mask m : filter.must_contain) {
    if (m >= table) throw OutOfRangeMask("must-contain mask outside ground set");
    ctx.forced_in |= Key{1} << m;
  }
  for (Mask m : filter.must_avoid) {
    if (m >= table) throw OutOfRangeMask("must-avoid mask outside ground set");
    ctx.forced_out |= Key{1} << m;
  }
  if (ctx.forced_in & ctx.forced_out) return {};

  std::vector<Key> keys = run_search(ctx, parallel);
  if (cacheable) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    key_cache().emplace(std::make_pair(n, rank_key), keys);
  }
  return keys;
}

}  // namespace

std::vector<SetSystem> enumerate_powerful(int n, const EnumFilter& filter,
                                          bool parallel) {
  if (n < 0 || n > kEnumCap)
    throw GroundTooLarge("enumeration is capped at n = " + std::to_string(kEnumCap));
  std::vector<SetSystem> out;
  for (Key key : enumerate_keys(n, filter, parallel))
    out.push_back(system_from_key(n, key));
  return out;
}

namespace {

int rank_of_powerful(const SetSystem& s) {
  return log2_exact(static_cast<std::uint64_t>(s.size()));
}

bool has_star(const SetSystem& s) {
  for (int e = 1; e <= s.order(); ++e)
    if (is_star(s, e)) return true;
  return false;
}

EnumerationReport build_report(int n, const std::vector<SetSystem>& systems) {
  EnumerationReport r;
  r.n = n;
  r.total = systems.size();
  for (const SetSystem& s : systems) {
    ++r.by_rank[rank_of_powerful(s)];
    if (is_linear(s).linear)
      ++r.linear_count;
    else
      ++r.nonlinear_count;
    if (has_star(s)) ++r.with_star_count;
  }
  return r;
}

}  // namespace

EnumerationReport census(int n) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationReport r = build_report(n, enumerate_powerful(n));
  r.runtime_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
  return r;
}

void write_census_cache(std::ostream& out, int n,
                        const std::vector<SetSystem>& systems) {
  out << "powerful-census v1 n=" << n << "\n";
  const Mask table = static_cast<Mask>(std::uint64_t{1} << n);
  for (const SetSystem& s : systems) {
    std::string bits(table, '0');
    for (Mask m : s.members()) bits[m] = '1';
    out << n << ' ' << rank_of_powerful(s) << ' '
        << (is_linear(s).linear ? 1 : 0) << ' ' << bits << "\n";
  }
}

std::vector<SetSystem> read_census_cache(std::istream& in, int n) {
  std::string header;
  if (!std::getline(in, header) ||
      header != "powerful-census v1 n=" + std::to_string(n))
    throw ParseError(1, "bad census cache header");
  const Mask table = static_cast<Mask>(std::uint64_t{1} << n);
  std::vector<SetSystem> systems;
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream is(line);
    int rec_n = 0, rank = 0, linear = 0;
    std::string bits;
    if (!(is >> rec_n >> rank >> linear >> bits) || rec_n != n ||
        bits.size() != table)
      throw ParseError(lineno, "bad census cache record");
    std::vector<Mask> members;
    for (Mask m = 0; m < table; ++m) {
      if (bits[m] == '1')
        members.push_back(m);
      else if (bits[m] != '0')
        throw ParseError(lineno, "bad membership bitstring");
    }
    systems.push_back(make_set_system(n, std::move(members)));
  }
  return systems;
}

EnumerationReport census_cached(int n, const std::string& cache_path) {
  {
    std::ifstream in(cache_path);
    if (in) {
      const auto start = std::chrono::steady_clock::now();
      EnumerationReport r = build_report(n, read_census_cache(in, n));
      r.runtime_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start).count();
      return r;
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SetSystem> systems = enumerate_powerful(n);
  std::ofstream out(cache_path);
  if (!out) throw Error("cannot write census cache: " + cache_path);
  write_census_cache(out, n, systems);
  EnumerationReport r = build_report(n, systems);
  r.runtime_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Theorem verification
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string> kExhaustiveIds = {
    "thm-cocircuits", "thm-direct-sum",  "thm-coloops",    "thm-rank-char",
    "thm-multiset-scale", "prop-minor-rank", "prop-minor-size", "prop-z",
    "thm-linear"};
const std::vector<std::string> kRestrictedIds = {"lemma-starcols",
                                                 "thm-deletable", "prop-star"};

std::string describe(const SetSystem& s) {
  std::string out = "S={";
  bool first = true;
  for (Mask m : s.members()) {
    if (!first) out += ',';
    out += format_mask(m);
    first = false;
  }
  return out + "}";
}

bool is_coloop_structural(const SetSystem& s, int e) {
  const Mask eb = Mask{1} << (e - 1);
  const Mask rest = s.full_mask() ^ eb;
  Mask x = 0;
  for (;;) {
    if (s.contains(x) != s.contains(x | eb)) return false;
    if (x == rest) break;
    x = (x - rest) & rest;
  }
  return true;
}

using Checker = void (*)(int n, VerificationReport& r);

void check_coloops(int n, VerificationReport& r) {
  for (const SetSystem& s : enumerate_powerful(n)) {
    for (int e = 1; e <= n; ++e) {
      ++r.instances_checked;
      if (is_coloop_structural(s, e) != s.contains(Mask{1} << (e - 1)))
        r.counterexamples.push_back(describe(s) + " e=" + std::to_string(e));
    }
  }
}

void check_rank_char(int n, VerificationReport& r) {
  for (const SetSystem& s : enumerate_powerful(n)) {
    const RankTable rt = rank_table(s);
    const int rank_e = rt.rank_of_ground();
    for (int e = 1; e <= n; ++e) {
      ++r.instances_checked;
      const Mask eb = Mask{1} << (e - 1);
      const bool ok_loop = is_loop(s, e) == (rt.at(eb) == 0);
      const bool ok_frame = is_frame(s, e) == (rt.at(eb) == rank_e);
      const bool ok_coloop =
          is_coloop(s, e) == (rank_e - rt.at(s.full_mask() ^ eb) == 1);
      if (!(ok_loop && ok_frame && ok_coloop))
        r.counterexamples.push_back(describe(s) + " e=" + std::to_string(e));
    }
  }
}

void check_cocircuits_determine(int n, VerificationReport& r) {
  std::map<std::vector<Mask>, SetSystem> seen;
  for (const SetSystem& s : enumerate_powerful(n)) {
    ++r.instances_checked;
    auto [it, inserted] = seen.emplace(cocircuits(s).members(), s);
    if (!inserted)
      r.counterexamples.push_back(describe(it->second) + " vs " + describe(s) +
                                  " share a cocircuit set");
  }
}

void check_direct_sum(int n, VerificationReport& r) {
  for (int a = 0; a <= n; ++a) {
    const int b = n - a;
    for (const SetSystem& s : enumerate_powerful(a)) {
      const std::vector<Mask> cs = cocircuits(s).members();
      for (const SetSystem& t : enumerate_powerful(b)) {
        ++r.instances_checked;
        std::vector<Mask> expected = cs;
        const CocircuitSet ct = cocircuits(t);
        for (Mask c : ct.members()) expected.push_back(c << a);
        std::sort(expected.begin(), expected.end());
        if (cocircuits(direct_sum(s, t)).members() != expected)
          r.counterexamples.push_back(describe(s) + " ⊕ " + describe(t));
      }
    }
  }
}

void check_multiset_scale(int n, VerificationReport& r) {
  for (const Multiset& m :
       random_powerful_multisets(1000, 0x9e3779b9u + std::uint64_t(n))) {
    ++r.instances_checked;
    const Indicator& f = m.indicator();
    const std::uint64_t d = f[0];
    for (Mask x = 0; x < f.table_size(); ++x) {
      if (f[x] % d != 0) {
        r.counterexamples.push_back("f(∅)=" + std::to_string(d) +
                                    " does not divide f(" + format_mask(x) +
                                    ")=" + std::to_string(f[x]));
        break;
      }
    }
  }
}

void check_minor_rank(int n, VerificationReport& r) {
  for (const SetSystem& s : enumerate_powerful(n)) {
    const Multiset m = Multiset::from_set(s);
    const RankTable rt = rank_table(m);
    for (int e = 1; e <= n; ++e) {
      ++r.instances_checked;
      const Mask eb = Mask{1} << (e - 1);
      const RankTable rc = rank_table(contract(m, e));
      const RankTable rd = rank_table(delete_element(m, e));
      bool ok = true;
      const Mask sub_table = static_cast<Mask>(std::uint64_t{1} << (n - 1));
      for (Mask x = 0; x < sub_table; ++x) {
        const Mask orig = insert_bit(x, e - 1);
        if (rc.at(x) != rt.at(orig | eb) - rt.at(eb)) ok = false;
        if (rd.at(x) != rt.at(orig)) ok = false;
      }
      if (!ok)
        r.counterexamples.push_back(describe(s) + " e=" + std::to_string(e));
    }
  }
}

void check_minor_size(int n, VerificationReport& r) {
  for (const SetSystem& s : enumerate_powerful(n)) {
    const RankTable rt = rank_table(s);
    for (int e = 1; e <= n; ++e) {
      ++r.instances_checked;
      const Mask eb = Mask{1} << (e - 1);
      bool ok = contract(s, e).size() == s.size() >> rt.at(eb);
      if (is_deletable(s, e)) {
        const auto sd = as_set(delete_element(Multiset::from_set(s), e));
        const std::size_t expected =
            is_coloop(s, e) ? s.size() / 2 : s.size();
        ok = ok && sd && sd->size() == expected;
      }
      if (!ok)
        r.counterexamples.push_back(describe(s) + " e=" + std::to_string(e));
    }
  }
}

std::vector<SetSystem> rank_restricted_domain(int n) {
  if (n <= 4) {
    std::vector<SetSystem> out;
    for (const SetSystem& s : enumerate_powerful(n))
      if (rank_of_powerful(s) == n - 1) out.push_back(s);
    return out;
  }
  EnumFilter filter;
  filter.rank = n - 1;
  return enumerate_powerful(n, filter);
}

void check_starcols(int n, VerificationReport& r) {
  for (const SetSystem& s : rank_restricted_domain(n)) {
    ++r.instances_checked;
    const RankTable rt = rank_table(s);
    int odd = 0;
    for (int e = 1; e <= n; ++e)
      if (rt.at(Mask{1} << (e - 1)) != 1) ++odd;
    if (odd > 1) r.counterexamples.push_back(describe(s));
  }
}

void check_deletable(int n, VerificationReport& r) {
  for (const SetSystem& s : rank_restricted_domain(n)) {
    ++r.instances_checked;
    bool any = false;
    for (int e = 1; e <= n && !any; ++e) any = is_deletable(s, e);
    if (!any) r.counterexamples.push_back(describe(s));
  }
}

void check_star_existence(int n, VerificationReport& r) {
  if (n <= 4) {
    for (const SetSystem& s : enumerate_powerful(n)) {
      ++r.instances_checked;
      if ((rank_of_powerful(s) == n - 1) != has_star(s))
        r.counterexamples.push_back(describe(s));
    }
  } else {
    // Restricted direction at n = 5: every rank-(n-1) set contains a star.
    for (const SetSystem& s : rank_restricted_domain(n)) {
      ++r.instances_checked;
      if (!has_star(s)) r.counterexamples.push_back(describe(s));
    }
  }
}

void check_z_properties(int n, VerificationReport& r) {
  // (a) rank entries match log2(z_∅/z_X) computed from definition-level counts.
  for (const SetSystem& s : enumerate_powerful(n)) {
    ++r.instances_checked;
    const RankTable rt = rank_table(s);
    const Mask full = s.full_mask();
    const std::uint64_t z0 = s.size();
    for (Mask x = 0;; ++x) {
      const std::uint64_t zx = reference::count_subsets_in(s, full ^ x);
      const bool pow2_ratio = zx != 0 && z0 % zx == 0 && is_power_of_two(z0 / zx);
      const int expected =
          pow2_ratio ? log2_exact(z0 / zx) : RankTable::kNonInteger;
      if (rt.at(x) != expected) {
        r.counterexamples.push_back(describe(s) + " X=" + format_mask(x));
        break;
      }
      if (x == full) break;
    }
  }
  if (n > 3) {
    // (b)+(d) spot form: z-counts of a powerful set are powers of two, and a
    // collection and its complement have z-counts summing to 2^(n-|X|).
    for (const SetSystem& s : enumerate_powerful(n)) {
      ++r.instances_checked;
      const Mask full = s.full_mask();
      const Mask table = static_cast<Mask>(std::uint64_t{1} << n);
      std::vector<Mask> comp_members;
      for (Mask m = 0; m < table; ++m)
        if (!s.contains(m)) comp_members.push_back(m);
      const SetSystem comp = make_set_system(n, std::move(comp_members));
      for (Mask x = 0;; ++x) {
        const std::uint64_t zs = reference::count_subsets_in(s, full ^ x);
        const std::uint64_t zc = reference::count_subsets_in(comp, full ^ x);
        if (!is_power_of_two(zs) ||
            zs + zc != std::uint64_t{1} << (n - std::popcount(x))) {
          r.counterexamples.push_back(describe(s) + " X=" + format_mask(x));
          break;
        }
        if (x == full) break;
      }
    }
    return;
  }
  // n ≤ 3: exhaustive over ALL set systems, powerful or not.
  const Mask table = static_cast<Mask>(std::uint64_t{1} << n);
  const std::uint64_t count = std::uint64_t{1} << table;
  std::vector<SetSystem> all;
  all.reserve(count);
  for (std::uint64_t key = 0; key < count; ++key) {
    std::vector<Mask> members;
    for (Mask m = 0; m < table; ++m)
      if (key >> m & 1) members.push_back(m);
    all.push_back(make_set_system(n, std::move(members)));
  }
  const Mask full = table - 1;
  auto z_profile = [&](const SetSystem& s) {
    std::vector<std::uint64_t> z(table);
    for (Mask x = 0; x < table; ++x)
      z[x] = reference::count_subsets_in(s, full ^ x);
    return z;
  };
  std::vector<std::vector<std::uint64_t>> profiles;
  profiles.reserve(all.size());
  for (const SetSystem& s : all) profiles.push_back(z_profile(s));
  // (b) powerfulness ⟺ all z-counts are powers of two.
  for (std::size_t i = 0; i < all.size(); ++i) {
    ++r.instances_checked;
    const bool all_pow2 = std::all_of(profiles[i].begin(), profiles[i].end(),
                                      [](std::uint64_t v) { return is_power_of_two(v); });
    if (all_pow2 != reference::is_powerful_naive(all[i]))
      r.counterexamples.push_back(describe(all[i]) + " (z power-of-two test)");
  }
  // (c) the z-profile determines the system.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      ++r.instances_checked;
      if (profiles[i] == profiles[j])
        r.counterexamples.push_back(describe(all[i]) + " vs " + describe(all[j]) +
                                    " share a z-profile");
    }
  // (d) complementary z-profiles identify complementary collections.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      ++r.instances_checked;
      bool complementary = true;
      for (Mask x = 0; x < table && complementary; ++x)
        complementary = profiles[i][x] + profiles[j][x] ==
                        std::uint64_t{1} << (n - std::popcount(x));
      if (!complementary) continue;
      std::vector<Mask> expected;
      for (Mask m = 0; m < table; ++m)
        if (!all[j].contains(m)) expected.push_back(m);
      if (all[i].members() != expected)
        r.counterexamples.push_back(describe(all[i]) + " vs " + describe(all[j]));
    }
}

void check_linear(int n, VerificationReport& r) {
  for (const SetSystem& s : enumerate_powerful(n)) {
    ++r.instances_checked;
    const bool lin = is_linear(s).linear;
    const bool sub = is_subcardinal(rank_table(s)).subcardinal;
    if (lin != sub)
      r.counterexamples.push_back(describe(s) + (lin ? " linear" : " nonlinear") +
                                  (sub ? " subcardinal" : " non-subcardinal"));
  }
}

const std::map<std::string, Checker>& checkers() {
  static const std::map<std::string, Checker> table = {
      {"thm-cocircuits", check_cocircuits_determine},
      {"thm-direct-sum", check_direct_sum},
      {"thm-coloops", check_coloops},
      {"thm-rank-char", check_rank_char},
      {"thm-multiset-scale", check_multiset_scale},
      {"prop-minor-rank", check_minor_rank},
      {"prop-minor-size", check_minor_size},
      {"lemma-starcols", check_starcols},
      {"thm-deletable", check_deletable},
      {"prop-star", check_star_existence},
      {"prop-z", check_z_properties},
      {"thm-linear", check_linear},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : checkers()) v.push_back(id);
    return v;
  }();
  return ids;
}

VerificationReport verify_theorem(int n, const std::string& theorem_id) {
  auto it = checkers().find(theorem_id);
  if (it == checkers().end())
    throw UnknownTheoremId("unknown theorem id: " + theorem_id);
  const bool restricted =
      std::find(kRestrictedIds.begin(), kRestrictedIds.end(), theorem_id) !=
      kRestrictedIds.end();
  const int cap = restricted ? 5 : 4;
  if (n < 0 || n > cap)
    throw GroundTooLarge(theorem_id + " runs for n ≤ " + std::to_string(cap));
  VerificationReport r;
  r.theorem_id = theorem_id;
  const auto start = std::chrono::steady_clock::now();
  it->second(n, r);
  r.runtime_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Multiset> random_powerful_multisets(std::size_t count,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<SetSystem>> pool;
  for (int n = 0; n <= 3; ++n) pool.push_back(enumerate_powerful(n));

  auto pick = [&](int n) -> const SetSystem& {
    return pool[n][rng() % pool[n].size()];
  };

  std::vector<Multiset> out;
  out.reserve(count);
  while (out.size() < count) {
    const int n1 = static_cast<int>(rng() % 4);
    Multiset m = Multiset::from_set(pick(n1));
    if (rng() % 2) {
      const int n2 = static_cast<int>(rng() % (std::min(3, 5 - n1) + 1));
      m = direct_sum(m, Multiset::from_set(pick(n2)));
    }
    const int deletions = static_cast<int>(rng() % 3);
    for (int i = 0; i < deletions && m.order() > 0; ++i)
      m = delete_element(m, 1 + static_cast<int>(rng() % m.order()));
    const std::uint64_t alpha = 1 + rng() % 3;
    out.push_back(m.scaled(alpha));
  }
  return out;
}

}  // namespace powerful
