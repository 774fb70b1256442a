// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit status =
// number of failed criteria. Run by ctest as the `acceptance` test.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "powerful/cli.hpp"
#include "powerful/elements.hpp"
#include "powerful/enumerate.hpp"
#include "powerful/io.hpp"
#include "powerful/linearity.hpp"
#include "powerful/minors.hpp"
#include "powerful/reference.hpp"

using namespace powerful;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << '\n';
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. Powerfulness oracle equivalence over all ∅-containing systems, n <= 3.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::uint64_t checked = 0;
  for (int n = 0; n <= 3 && ok; ++n) {
    const std::uint64_t candidates = std::uint64_t{1} << ((1 << n) - 1);
    for (std::uint64_t c = 0; c < candidates; ++c) {
      std::vector<Mask> members{0};
      for (int m = 1; m < (1 << n); ++m)
        if (c >> (m - 1) & 1) members.push_back(static_cast<Mask>(m));
      const SetSystem s = make_set_system(n, std::move(members));
      ++checked;
      if (is_powerful_set(s) != reference::is_powerful_naive(s)) {
        ok = false;
        break;
      }
    }
  }
  const double secs = seconds_since(t0);
  report("criterion-1 oracle equivalence n<=3", ok && secs < 1.0,
         std::to_string(checked) + " systems in " + std::to_string(secs) +
             " s");
}

// 2. Exhaustive theorem suite at n <= 4.
void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  std::uint64_t instances = 0;
  for (const char* id :
       {"thm-coloops", "thm-rank-char", "thm-cocircuits", "prop-minor-rank",
        "prop-minor-size", "prop-z", "thm-linear"}) {
    for (int n = 0; n <= 4; ++n) {
      const VerificationReport rep = verify_theorem(n, id);
      instances += rep.instances_checked;
      if (!rep.counterexamples.empty()) {
        ok = false;
        detail = std::string(id) + " n=" + std::to_string(n) + ": " +
                 rep.counterexamples.front();
      }
    }
  }
  const double secs = seconds_since(t0);
  if (detail.empty())
    detail = std::to_string(instances) + " instances in " +
             std::to_string(secs) + " s";
  report("criterion-2 theorem suite n<=4", ok && secs < 60.0, detail);
}

// 3. Star/deletable suite at n <= 5 restricted to rank n-1.
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const char* id : {"lemma-starcols", "thm-deletable", "prop-star"}) {
    for (int n = 0; n <= 5; ++n) {
      const VerificationReport rep = verify_theorem(n, id);
      if (!rep.counterexamples.empty()) {
        ok = false;
        detail = std::string(id) + " n=" + std::to_string(n) + ": " +
                 rep.counterexamples.front();
      }
    }
  }
  const double secs = seconds_since(t0);
  if (detail.empty()) detail = std::to_string(secs) + " s";
  report("criterion-3 star/deletable suite n<=5", ok && secs < 600.0, detail);
}

// 4. Counting bijection: census(n).by_rank[n-1] == census(n-1).total.
void criterion_4() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 5; ++n) {
    const std::uint64_t got = census(n).by_rank.at(n - 1);
    const std::uint64_t want = census(n - 1).total;
    if (!detail.empty()) detail += ", ";
    detail += "n=" + std::to_string(n) + ": " + std::to_string(got) +
              (got == want ? " == " : " != ") + std::to_string(want);
    if (got != want) ok = false;
  }
  report("criterion-4 counting bijection", ok, detail);
}

// 5. Worked examples, bit-exact.
void criterion_5() {
  bool ok = true;
  std::string detail;
  const SetSystem s1 = make_set_system(3, {0, 5, 6, 7});
  const SetSystem s2 = make_set_system(4, {0, 11, 13, 14});

  // (a) S1 \ 1 is the multiset with {2,3} doubled, and not a set.
  const Multiset d = delete_element(Multiset::from_set(s1), 1);
  if (d.indicator().values() != std::vector<std::uint64_t>{1, 0, 1, 2} ||
      as_set(d).has_value()) {
    ok = false;
    detail += "(a) ";
  }

  // (b) S2: powerful, every element deletable, nonlinear, witness {4}.
  bool b_ok = is_powerful_set(s2);
  for (int e = 1; e <= 4; ++e) b_ok = b_ok && is_deletable(s2, e);
  const LinearityReport rep = linearity_report(s2);
  b_ok = b_ok && !rep.linear.linear && !rep.subcardinal.subcardinal &&
         rep.subcardinal.witness == Mask{8};
  if (!b_ok) {
    ok = false;
    detail += "(b) ";
  }

  // (c) all 2-subsets of {1,2,3} invert to the 4-member XOR-closed code.
  const auto code = from_cocircuits(CocircuitSet(3, {3, 5, 6}), 3);
  if (!code.has_value() || *code != make_set_system(3, {0, 3, 5, 6}) ||
      !is_linear(*code).linear) {
    ok = false;
    detail += "(c) ";
  }
  report("criterion-5 worked examples", ok, detail);
}

// 6. Multiset laws on the random corpus.
void criterion_6() {
  bool ok = true;
  std::string detail;
  const auto corpus = random_powerful_multisets(1000, 0xC0FFEE);
  for (const Multiset& m : corpus) {
    const Indicator& f = m.indicator();
    const std::uint64_t d = f[0];
    for (Mask x = 0; x < f.table_size() && ok; ++x)
      if (f[x] % d != 0) {
        ok = false;
        detail = "divisibility";
      }
    if (!ok) break;
    const RankTable rt = rank_table(m);
    if (rank_table(normalize(m)) != rt) {
      ok = false;
      detail = "normalize changed ranks";
      break;
    }
    for (std::uint64_t alpha : {2, 3}) {
      if (rank_table(m.scaled(alpha)) != rt) {
        ok = false;
        detail = "Q(alpha f) != Qf";
      }
    }
    if (!ok) break;
    for (int e = 1; e <= m.order() && ok; ++e) {
      const Mask eb = Mask{1} << (e - 1);
      const RankTable rc = rank_table(contract(m, e));
      const RankTable rd = rank_table(delete_element(m, e));
      const Mask sub_table = Mask{1} << (m.order() - 1);
      for (Mask x = 0; x < sub_table; ++x) {
        const Mask orig = insert_bit(x, e - 1);
        if (rc.at(x) != rt.at(orig | eb) - rt.at(eb) ||
            rd.at(x) != rt.at(orig)) {
          ok = false;
          detail = "minor rank law";
        }
      }
    }
    if (!ok) break;
  }
  report("criterion-6 multiset laws", ok,
         ok ? std::to_string(corpus.size()) + " multisets" : detail);
}

// 7. Linearity equivalence, exhaustive n <= 4 plus the corpus.
void criterion_7() {
  bool ok = true;
  std::uint64_t checked = 0;
  for (int n = 0; n <= 4 && ok; ++n)
    for (const SetSystem& s : enumerate_powerful(n)) {
      ++checked;
      if (is_linear(s).linear !=
          is_subcardinal(rank_table(s)).subcardinal)
        ok = false;
    }
  for (const Multiset& m : random_powerful_multisets(1000, 0xC0FFEE)) {
    ++checked;
    const bool sub = is_subcardinal(rank_table(m)).subcardinal;
    const auto s = as_set(m);
    const bool lin = s.has_value() && is_linear(*s).linear;
    if (lin != sub) ok = false;
  }
  report("criterion-7 linear iff subcardinal", ok,
         std::to_string(checked) + " systems");
}

// 8. Determinism and round-trips.
void criterion_8() {
  bool ok = true;
  std::string detail;

  for (int n = 0; n <= 5; ++n)
    if (enumerate_powerful(n) != enumerate_powerful(n)) {
      ok = false;
      detail = "enumeration order";
    }

  std::ostringstream cache1, cache2;
  const auto systems = enumerate_powerful(4);
  write_census_cache(cache1, 4, systems);
  write_census_cache(cache2, 4, systems);
  if (cache1.str() != cache2.str() || cache1.str().empty()) {
    ok = false;
    detail = "census cache bytes";
  }

  auto run_once = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    run_cli(args, out, err);
    return out.str();
  };
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"census", "--order", "5"},
        std::vector<std::string>{"enumerate", "--order", "4"},
        std::vector<std::string>{"verify", "--order", "4",
                                 "--theorem", "thm-linear"}}) {
    if (run_once(args) != run_once(args)) {
      ok = false;
      detail = "cli bytes";
    }
  }

  // Minor files round-trip losslessly.
  const SetSystem s1 = make_set_system(3, {0, 5, 6, 7});
  const Multiset m = delete_element(Multiset::from_set(s1), 1);
  const std::vector<int> ground{2, 3};
  const std::string text = write_system_string(m.indicator(), &ground);
  if (read_system_string(text) != m.indicator()) {
    ok = false;
    detail = "minor round trip";
  }
  report("criterion-8 determinism & round-trip", ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures != 0)
    std::cout << failures << " criterion(s) failed\n";
  return failures;
}
