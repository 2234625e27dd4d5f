#pragma once

// Sweep driver and report persistence: deterministic parameter sweeps over
// cells and characters, JSON-lines / CSV output, and the two numerical
// side reports (stationary-phase count/rank/inequality data and the
// bounded-ratio measurement on the sαsβ cell at (r, s) = (2, 1)).

#include <iosfwd>
#include <string>
#include <vector>

#include "klsp4/bounds.hpp"
#include "klsp4/sp4.hpp"
#include "klsp4/sums.hpp"

namespace klsp4 {

struct SweepConfig {
  std::vector<i64> primes = {2, 3};
  std::vector<std::string> cells = {"all"};  // weyl names, or "all"
  int max_rs_norm = 81;                      // keep cells with p^(r+s) <= this
  int r_max = 4;
  int s_max = 4;
  std::vector<i64> char_values = {0, 1};  // grid entries for m1, m2, n1, n2
  bool char_include_p = false;            // additionally include the prime
  i64 budget_terms = 0;                   // 0 = default budget
  std::string format = "json";            // json | csv | text
  std::string out;                        // output path ("" = stdout only)
};

// Parses a flat TOML subset: `key = value` lines with integer, boolean,
// quoted-string, and homogeneous-array values; '#' comments.  Unknown keys
// are rejected.
SweepConfig parse_sweep_config(const std::string& text);

struct ReportRow {
  ReportRow(const CellParams& c, const CharacterPair& ch) : cell(c), chars(ch) {}

  CellParams cell;
  CharacterPair chars;
  double magnitude = 0.0;
  std::uint64_t tally_digest = 0;
  i64 term_count = 0;
  BoundId bound_id = BoundId::Trivial;
  double bound = 0.0;
  double ratio = 0.0;
  double ms = 0.0;  // kept at 0 by default so reports are byte-deterministic
  std::string error;  // nonempty if this row failed; other fields are zeroed
};

// Evaluates every (cell, character) pair of the config in a fixed sorted
// order.  Per-row failures are recorded in `error`, never aborting the sweep.
std::vector<ReportRow> run_sweep(const SweepConfig& cfg);

void write_jsonl(const std::vector<ReportRow>& rows, std::ostream& os);
void write_csv(const std::vector<ReportRow>& rows, std::ostream& os);
void write_text(const std::vector<ReportRow>& rows, std::ostream& os);

// Stationary-phase data for the phase m1/x + m2 x^2/y + n2 y at modulus
// p^(2j): the critical set D(Z/p^j), Hessian ranks mod p at its points, the
// exact exponential sum, and the |S| <= |D| p^(s + t/2) comparison (s = 2j).
struct StationaryPhaseReport {
  i64 p = 0;
  i64 m1 = 0, m2 = 0, n2 = 0;
  int j = 0;
  int s = 0;  // modulus exponent, = 2j
  i64 d_count = 0;          // |D(Z/p^j)|
  i64 d_count_mod_p = 0;    // |D(Z/p)|
  int min_rank = 2;         // minimal Hessian rank mod p over D(Z/p)
  int t = 0;                // max(2 - rank), 0 if D(Z/p) is empty
  double sum_magnitude = 0.0;
  double bound = 0.0;  // |D(Z/p^j)| * p^(s + t/2)
  bool inequality_holds = false;
};

StationaryPhaseReport stationary_phase_report(i64 p, i64 m1, i64 m2, i64 n2, int j);

// Max of |Kl(n_{ab,2,1})| / p^2 over the prime list and unit character data;
// the meaningful property is boundedness across primes, not a constant.
struct KatzRatioReport {
  std::vector<std::pair<i64, double>> per_prime;  // (p, max ratio)
  double max_ratio = 0.0;
};

KatzRatioReport katz_ratio_report(const std::vector<i64>& primes);

}  // namespace klsp4
