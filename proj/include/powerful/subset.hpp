#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powerful/errors.hpp"

namespace powerful {

/// A subset of the ground set, one bit per element. Bit i holds the element
/// labeled i+1 (labels are 1-indexed at every external boundary).
using Mask = std::uint32_t;

/// Largest ground set an Indicator will hold (2^20-entry tables).
inline constexpr int kMaxGround = 20;

constexpr bool is_power_of_two(std::uint64_t k) {
  return k != 0 && (k & (k - 1)) == 0;
}

/// Exact log2 of a power of two.
constexpr int log2_exact(std::uint64_t k) {
  int r = 0;
  while (k > 1) {
    k >>= 1;
    ++r;
  }
  return r;
}

/// Re-inserts bit position b into a compacted mask (inverse of dropping it).
constexpr Mask insert_bit(Mask x, int b) {
  return (x & ((Mask{1} << b) - 1)) | ((x >> b) << (b + 1));
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r < a) throw Overflow("integer overflow in subset sum");
  return r;
}

/// Multiplicity table over the full power set of an n-element ground set.
/// f(X) is the number of copies of X; {0,1}-valued tables are plain set
/// systems. Values are immutable once the owner stops calling set().
class Indicator {
 public:
  explicit Indicator(int n);
  Indicator(int n, std::vector<std::uint64_t> values);

  int order() const { return n_; }
  Mask full_mask() const { return static_cast<Mask>((std::uint64_t{1} << n_) - 1); }
  std::size_t table_size() const { return values_.size(); }

  std::uint64_t operator[](Mask x) const { return values_[x]; }
  std::uint64_t at(Mask x) const;
  void set(Mask x, std::uint64_t v);
  void add(Mask x, std::uint64_t v);

  /// Total mass, Σ_X f(X).
  std::uint64_t total() const;

  const std::vector<std::uint64_t>& values() const { return values_; }

  bool operator==(const Indicator&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> values_;
};

/// Downward subset-sum: g(W) = Σ_{Y⊆W} f(Y), in O(n·2^n).
Indicator zeta_transform(const Indicator& f);
Indicator zeta_transform_serial(const Indicator& f);
Indicator zeta_transform_parallel(const Indicator& f);

/// Mass of f supported inside E\X, i.e. Σ_{Y ⊆ E\X} f(Y).
std::uint64_t z_count(const Indicator& f, Mask x);

// Label <-> mask conversion. Labels are 1-indexed.
Mask mask_from_labels(const std::vector<int>& labels, int n);
std::vector<int> labels_of(Mask x);
std::string format_mask(Mask x);
Mask parse_label_list(const std::string& csv, int n);

}  // namespace powerful
