#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with captured streams.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "primerep/report.hpp"

namespace primerep {

struct RunConfig {
  std::int64_t horizon = kDefaultHorizon;  // univariate scans
  std::int64_t box = kDefaultBoxSide;      // multivariate scans
  std::size_t bit_budget = std::size_t{1} << 24;
  std::uint64_t seed = 0;
  std::uint64_t factor_budget = 100'000'000;
  std::size_t sieve_cap = kDefaultSieveMemoryCap;
  std::uint64_t density_cutoff = 1'000'000;  // prime cutoff of the Bateman-Horn product
  bool strict_positive_n = false;
  std::uint64_t x_min = 1;  // Fermat domain
  bool json = false;
  unsigned threads = 1;
  bool timing = false;

  EvalOptions eval() const;
  FactoringConfig factoring() const;
  // Horizon for a scan over `arity` variables.
  std::int64_t horizon_for(unsigned arity) const { return arity <= 1 ? horizon : box; }
  Json to_json() const;
};

// key=value lines; '#' starts a comment. Unknown keys raise UsageError.
void apply_config_text(RunConfig& config, const std::string& text);

struct PaperCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // what was observed, when it differs from the claim
};

// The full example corpus. Deterministic for any thread count.
std::vector<PaperCheck> verify_paper(const RunConfig& config);

// Exit codes: 0 conclusive success, 2 some result Unknown, 1 usage or
// validation error (including a verify-paper mismatch).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace primerep
