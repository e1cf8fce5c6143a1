#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nesto/parallel.hpp"

namespace nesto {

struct SuiteResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyOptions {
  int max_tree_n = 8;
  std::uint64_t seed = 20111017;
  Execution exec = Execution::parallel;
};

// Each suite is self-contained and deterministic for a given seed.
SuiteResult suite_engine_oracle_agreement(const VerifyOptions& opts);
SuiteResult suite_known_values(const VerifyOptions& opts);
SuiteResult suite_tree_shifts_lower_gamma(const VerifyOptions& opts);
SuiteResult suite_flossing_lowers_gamma(const VerifyOptions& opts);
SuiteResult suite_path_star_bounds(const VerifyOptions& opts);
SuiteResult suite_shift_poset(const VerifyOptions& opts);
SuiteResult suite_seven_vertex_figure(const VerifyOptions& opts);
SuiteResult suite_dehn_sommerville(const VerifyOptions& opts);
SuiteResult suite_gamma_nonnegative(const VerifyOptions& opts);
SuiteResult suite_inclusion_monotone(const VerifyOptions& opts);
SuiteResult suite_facet_identity(const VerifyOptions& opts);
SuiteResult suite_product_law(const VerifyOptions& opts);
SuiteResult suite_flag_chains(const VerifyOptions& opts);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

/// "PASS  [3] name (cases, seconds) detail" lines.
std::string format_suite_table(const std::vector<SuiteResult>& results);

}  // namespace nesto
