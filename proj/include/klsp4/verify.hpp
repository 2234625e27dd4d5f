#pragma once

// The acceptance/verification suite: each check exercises one global
// property of the implementation (oracle agreement, exact identities,
// symmetries, bounds, determinism) over a fixed desk-scale grid and reports
// pass/fail with a short diagnostic.

#include <string>
#include <vector>

#include "klsp4/sp4.hpp"

namespace klsp4 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

// The shared desk-scale grid: all admissible cells with p in {2, 3} and
// p^(r+s) <= 81.
std::vector<CellParams> acceptance_cells();

// Character tuples with entries in {0, 1, 2, p} (duplicates removed).
std::vector<CharacterPair> acceptance_characters(i64 p);

CheckResult check_oracle_agreement();        // 1
CheckResult check_term_count_bound();        // 2
CheckResult check_reduction_formulas();      // 3
CheckResult check_swap_symmetry();           // 4
CheckResult check_scaling_identity();        // 5
CheckResult check_orbit_sum_identity();      // 6
CheckResult check_rank_one_factorizations(); // 7
CheckResult check_weil_bound();              // 8
CheckResult check_stationary_phase();        // 9
CheckResult check_ratio_regression();        // 10
CheckResult check_condition_table();         // 11
CheckResult check_sweep_determinism();       // 12

std::vector<CheckResult> run_all_checks();

}  // namespace klsp4
