#include "powerful/subset.hpp"

#include <sstream>

namespace powerful {

Indicator::Indicator(int n) : n_(n) {
  if (n < 0 || n > kMaxGround)
    throw GroundTooLarge("ground-set size " + std::to_string(n) +
                         " outside [0, " + std::to_string(kMaxGround) + "]");
  values_.assign(std::size_t{1} << n, 0);
}

Indicator::Indicator(int n, std::vector<std::uint64_t> values) : Indicator(n) {
  if (values.size() != values_.size())
    throw Error("indicator table must have exactly 2^n entries");
  values_ = std::move(values);
}

std::uint64_t Indicator::at(Mask x) const {
  if (x >= table_size()) throw OutOfRangeMask("mask out of range");
  return values_[x];
}

void Indicator::set(Mask x, std::uint64_t v) {
  if (x >= table_size()) throw OutOfRangeMask("mask out of range");
  values_[x] = v;
}

void Indicator::add(Mask x, std::uint64_t v) {
  if (x >= table_size()) throw OutOfRangeMask("mask out of range");
  values_[x] = checked_add(values_[x], v);
}

std::uint64_t Indicator::total() const {
  std::uint64_t s = 0;
  for (auto v : values_) s = checked_add(s, v);
  return s;
}

Indicator zeta_transform_serial(const Indicator& f) {
  Indicator g = f;
  const Mask size = static_cast<Mask>(g.table_size());
  for (int i = 0; i < g.order(); ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask w = 0; w < size; ++w)
      if (w & bit) g.set(w, checked_add(g[w], g[w ^ bit]));
  }
  return g;
}

Indicator zeta_transform_parallel(const Indicator& f) {
  Indicator g = f;
  const std::int64_t half = static_cast<std::int64_t>(g.table_size()) / 2;
  for (int i = 0; i < g.order(); ++i) {
    const std::int64_t bit = std::int64_t{1} << i;
    // Within one level only entries with `bit` set are written, and their
    // sources have `bit` clear, so iterations are independent. Index j walks
    // exactly the entries with `bit` set.
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < half; ++j) {
      const Mask w =
          static_cast<Mask>(((j & ~(bit - 1)) << 1) | bit | (j & (bit - 1)));
      g.set(w, checked_add(g[w], g[w ^ static_cast<Mask>(bit)]));
    }
  }
  return g;
}

Indicator zeta_transform(const Indicator& f) {
#ifdef _OPENMP
  if (f.order() >= 15) return zeta_transform_parallel(f);
#endif
  return zeta_transform_serial(f);
}

std::uint64_t z_count(const Indicator& f, Mask x) {
  if (x >= f.table_size()) throw OutOfRangeMask("mask out of range");
  const Mask comp = f.full_mask() ^ x;
  std::uint64_t s = 0;
  Mask sub = comp;
  for (;;) {
    s = checked_add(s, f[sub]);
    if (sub == 0) break;
    sub = (sub - 1) & comp;
  }
  return s;
}

Mask mask_from_labels(const std::vector<int>& labels, int n) {
  Mask m = 0;
  for (int e : labels) {
    if (e < 1 || e > n)
      throw ElementOutOfRange("element " + std::to_string(e) +
                              " not in ground set of size " + std::to_string(n));
    m |= Mask{1} << (e - 1);
  }
  return m;
}

std::vector<int> labels_of(Mask x) {
  std::vector<int> out;
  for (int i = 0; x >> i; ++i)
    if (x >> i & 1) out.push_back(i + 1);
  return out;
}

std::string format_mask(Mask x) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : labels_of(x)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

Mask parse_label_list(const std::string& csv, int n) {
  std::vector<int> labels;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw Error("empty element label in '" + csv + "'");
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw Error("bad element label '" + tok + "'");
    }
    if (pos != tok.size()) throw Error("bad element label '" + tok + "'");
    labels.push_back(v);
  }
  return mask_from_labels(labels, n);
}

}  // namespace powerful
