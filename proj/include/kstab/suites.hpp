#pragma once

// Reproduction suites: each runs a fixed family of exact checks and returns a
// report. Catalog-backed suites accept orders up to 8.

#include <string>
#include <string_view>
#include <vector>

#include "kstab/report.hpp"

namespace kstab {

inline constexpr int kMaxSuiteOrder = 8;

/// Every (k, l)-stable class with n <= max_n obeys alpha <= floor((n-k+1)/2) + l.
/// One aggregated check per (n, k, l).
VerificationReport suite_stability_bound(int max_n, int jobs = 1);

/// Every maximum independent set of every (1,0)-stable class has a
/// saturating matching into its complement.
VerificationReport suite_hall(int max_n, int jobs = 1);

/// The tight (2,0)-stable classes on an odd number of vertices are exactly
/// the cycle. n in {3,5,7,9}, or 11 with allow_long.
VerificationReport suite_uniqueness(int n_odd, int jobs = 1, bool allow_long = false);

/// Tight (1,0)-stable classes lie between the matching and bipartite
/// constructions in edge count, and both ends are attained.
VerificationReport suite_edge_bounds(int max_n, int jobs = 1);

/// alpha <= floor(n - m/2) for m stable vertices, plus the equality witnesses.
VerificationReport suite_stable_vertex_bound(int max_n, int jobs = 1);

/// Adding an isolated vertex to a tight (k,l)-stable graph gives a tight
/// (k+1,l+1)-stable graph; checked on every tight class up to max_n (<= 7).
VerificationReport suite_lift(int max_n, int jobs = 1);

/// f_{s,s+t}(n) = n - t on every cell where the closed form applies.
VerificationReport suite_erdos_rogers(int max_n, int jobs = 1);

/// Named constructions: circulant stability and alpha, tight families,
/// non-existence at n = 6, the 2k-vertex circulant claim, lifted witnesses.
VerificationReport suite_constructions(int jobs = 1);

/// Keys of the checks expected to carry discrepancy-noted.
std::vector<std::string> pinned_discrepancies();

/// Compares the report's discrepancy-noted keys against the pinned set.
Check discrepancy_pin_check(const VerificationReport& report);

struct RunConfig {
  int max_n = kMaxSuiteOrder;
  int jobs = 0;  ///< <= 0 means hardware parallelism
  bool allow_long = false;
  std::vector<std::string> suites;  ///< empty selects every suite
};

const std::vector<std::string>& suite_names();

/// Runs the selected suites in the fixed order of suite_names(); when the
/// constructions suite runs, a discrepancy-pin check is appended.
/// Throws std::invalid_argument on unknown suite names.
VerificationReport run_all(const RunConfig& config);

}  // namespace kstab
