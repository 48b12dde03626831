#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "deltak/localization.hpp"

namespace deltak {

enum class CheckStatus { Pass, Fail, Skip };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool gating = true;
  CheckStatus status = CheckStatus::Skip;
  double seconds = 0;
  std::string detail;
};

struct SelftestOptions {
  EngineOptions engine;
  /// Seed for the random sample of n = 4 families.
  std::uint64_t sample_seed = 20240917;
  int random_n4 = 200;
  bool stretch = true;
  bool benchmark = true;
  /// Worker count for the stretch and benchmark criteria.
  int parallel_jobs = 8;
  /// Restrict to these ids; empty runs all.
  std::vector<int> only;
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_selftest(const SelftestOptions& options);

/// "PASS  3  gating  12.4s  name  (detail)"
std::string format_result(const CriterionResult& r);

/// True iff every gating criterion passed.
bool gating_passed(const std::vector<CriterionResult>& results);

/// Fixtures used by the self-test and the CLI.
DeltaMatroid three_singletons_family();
DeltaMatroid star_failure_family();
DeltaMatroid seven_vertex_graph_family();

}  // namespace deltak
