#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plc/regions.hpp"

/// Golden-value suites and property checks.
namespace plc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  /// Reported but never counted as a failure.
  bool informational = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// "a2", "a3", "a4" or "properties". Throws DomainError for other names.
SuiteReport run_suite(std::string_view name);

std::string format_histogram(const std::map<std::size_t, std::size_t>& h);

/// R followed by its inverse is the identity on random non-negative integer
/// points.
CheckResult check_round_trip(int rank, std::size_t points, std::uint64_t seed);
/// Every random point lies in a region whose map agrees with evaluation;
/// points strictly inside a region lie in no other region.
CheckResult check_atlas_agreement(const RegionAtlas& atlas, std::size_t points, std::uint64_t seed);
/// Phi+(P) is a disjoint union and no root column lies on the central line,
/// over every quiver of ranks 2..max_rank.
CheckResult check_phi_disjoint(int max_rank);
/// No chamber set of any reduced word is an initial or terminal segment.
CheckResult check_chamber_sets_proper(int max_rank);
/// Quiver -> chamber set -> quiver is the identity, and so is the reverse
/// on every admissible subset.
CheckResult check_quiver_round_trip(int max_rank);
/// Atlases built with two different move paths are identical.
CheckResult check_path_independence(int rank);

}  // namespace plc
