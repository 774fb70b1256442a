#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "powerful/elements.hpp"
#include "powerful/linearity.hpp"

namespace powerful {

/// Everything `analyze` reports about one input system. Set-only fields
/// (element classes, cocircuits, linearity, deletability) are left empty for
/// inputs with repeated members or without ∅.
struct AnalysisOutput {
  bool multiset = false;  // some member has multiplicity > 1
  int order = 0;
  std::uint64_t size = 0;  // total mass, Σ f(X)
  bool powerful = false;
  std::optional<int> rank;  // r(E); nullopt when non-integer or f(∅)=0
  std::vector<ElementClass> elements;
  std::vector<Mask> cocircuit_masks;
  std::optional<LinearityReport> linearity;
  std::vector<int> deletable;
};

AnalysisOutput analyze(const Indicator& f);

/// Entry point behind main(). Subcommands: analyze, rank, minor, enumerate,
/// census, verify. Returns 0 on success, 1 on input error, 2 when verify
/// finds counterexamples.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace powerful
