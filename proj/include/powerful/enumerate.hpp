#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powerful/core.hpp"

namespace powerful {

/// Optional constraints applied during enumeration.
struct EnumFilter {
  std::optional<int> rank;          // r(E), i.e. log2 |S|
  std::vector<Mask> must_contain;   // forced members
  std::vector<Mask> must_avoid;     // forced non-members
};

/// Every powerful set of order n exactly once, ordered colexicographically by
/// membership characteristic vector. ∅ is always forced in. Hard cap n = 5;
/// the n = 5 search tree is split across OpenMP threads unless `parallel` is
/// false.
std::vector<SetSystem> enumerate_powerful(int n, const EnumFilter& filter = {},
                                          bool parallel = true);

struct EnumerationReport {
  int n = 0;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> by_rank;
  std::uint64_t linear_count = 0;
  std::uint64_t nonlinear_count = 0;
  std::uint64_t with_star_count = 0;
  double runtime_seconds = 0.0;
};

EnumerationReport census(int n);

/// Census backed by a results file: loads the records when the file exists
/// and carries a matching header, enumerates and writes them otherwise.
EnumerationReport census_cached(int n, const std::string& cache_path);

void write_census_cache(std::ostream& out, int n,
                        const std::vector<SetSystem>& systems);
std::vector<SetSystem> read_census_cache(std::istream& in, int n);

struct VerificationReport {
  std::string theorem_id;
  std::uint64_t instances_checked = 0;
  std::vector<std::string> counterexamples;
  double runtime_seconds = 0.0;
};

/// Machine-checks one paper result over the full enumerated domain.
/// Exhaustive ids run for n ≤ 4; the rank-(n-1)-restricted ids
/// (lemma-starcols, thm-deletable, prop-star) also run at n = 5.
VerificationReport verify_theorem(int n, const std::string& theorem_id);

const std::vector<std::string>& theorem_ids();

/// Deterministic corpus of powerful multisets built from scalings, direct
/// sums, and deletion chains of enumerated powerful sets.
std::vector<Multiset> random_powerful_multisets(std::size_t count,
                                                std::uint64_t seed);

}  // namespace powerful
