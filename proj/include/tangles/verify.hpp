#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tangles/gauss_diagram.hpp"

namespace tangles::verify {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int cases = 100;
  int max_strings = 4;
  int max_arrows = 10;
  int max_degree = 3;
  int threads = 0; // 0: TANGLE_TREES_THREADS, then hardware
};

struct CaseFailure {
  int index = 0;
  std::string detail;
  std::string diagram; // serialized, greedily minimized
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  int cases_run = 0;
  std::vector<CaseFailure> failures;
  std::vector<std::string> notes;
  bool passed() const { return failures.empty(); }
};

/// Suites: reidemeister (invariance under one random move per case), skein
/// (both crossing-change identities), properties (ordering, reflection,
/// cyclic-shift and orientation-reversal identities), dias (exhaustive
/// small-size kernel checks), mu-equality (tree coefficients against the
/// Magnus oracle), operad (grafting prediction; random pairs are logged,
/// the fixed examples assert). Throws std::invalid_argument on an unknown
/// name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

std::vector<std::string> suite_names();

/// Greedy arrow deletion: keep removing arrows while the predicate still
/// reports failure. Used to shrink fuzz counterexamples before reporting.
GaussDiagram minimize_failure(GaussDiagram g,
                              const std::function<bool(const GaussDiagram&)>& fails);

/// Worker count: explicit value, else the TANGLE_TREES_THREADS cap, else
/// hardware concurrency. Sharding never changes results; every case is
/// generated from (seed, index).
int resolve_threads(int requested);

/// Run fn over [0, cases) across workers; fn must be pure per index.
void parallel_cases(int cases, int threads, const std::function<void(int)>& fn);

} // namespace tangles::verify
