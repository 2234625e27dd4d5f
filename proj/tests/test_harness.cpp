#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "klsp4/bounds.hpp"
#include "klsp4/report.hpp"

using namespace klsp4;

TEST_CASE("sweep config parsing") {
  SweepConfig cfg = parse_sweep_config(R"(
# comment
primes = [2, 3]
cells = ["ab", "w0"]
r_max = 2
s_max = 1
char_values = [0, 1]
char_include_p = true
format = "csv"
out = "rows.csv"
budget_terms = 1000000
)");
  CHECK(cfg.primes == std::vector<i64>{2, 3});
  CHECK(cfg.cells == std::vector<std::string>{"ab", "w0"});
  CHECK(cfg.r_max == 2);
  CHECK(cfg.s_max == 1);
  CHECK(cfg.char_include_p);
  CHECK(cfg.format == "csv");
  CHECK(cfg.out == "rows.csv");
  CHECK(cfg.budget_terms == 1000000);

  CHECK_THROWS_AS(parse_sweep_config("nonsense_key = 1"), domain_error);
  CHECK_THROWS_AS(parse_sweep_config("format = \"xml\""), domain_error);
  CHECK_THROWS_AS(parse_sweep_config("primes = [2"), domain_error);
}

TEST_CASE("sweep rows and serialization") {
  SweepConfig cfg;
  cfg.primes = {3};
  cfg.cells = {"ab"};
  cfg.r_max = 1;
  cfg.s_max = 1;
  cfg.char_values = {0, 1};
  std::vector<ReportRow> rows = run_sweep(cfg);
  // Cells (0,0), (1,0), (1,1), each with 16 character tuples.
  CHECK(rows.size() == 3 * 16);
  for (const ReportRow& row : rows) CHECK(row.error.empty());

  std::ostringstream js;
  write_jsonl(rows, js);
  std::string first_line = js.str().substr(0, js.str().find('\n'));
  CHECK(first_line.find("\"cell\":{\"w\":\"ab\"") != std::string::npos);
  CHECK(first_line.find("\"tally_digest\"") != std::string::npos);

  std::ostringstream cs;
  write_csv(rows, cs);
  CHECK(cs.str().rfind("w,p,r,s,m1,m2,n1,n2,magnitude,tally_digest,term_count,"
                       "bound_id,bound_value,ratio,ms,error\r\n", 0) == 0);

  // Determinism: a second run renders identically.
  std::ostringstream js2;
  write_jsonl(run_sweep(cfg), js2);
  CHECK(js.str() == js2.str());
}

TEST_CASE("per-cell bound values") {
  // Two-sided bound on the ba cell.
  CHECK(bound_value(BoundId::Ba, CellParams(Weyl::BA, 3, 1, 2), CharacterPair{1, 1, 1, 1}) ==
        doctest::Approx(9.0));
  // Long-cell bound with unit characters.
  CHECK(bound_value(BoundId::W0, CellParams(Weyl::W0, 2, 1, 1), CharacterPair{1, 1, 1, 1}) ==
        doctest::Approx(2.0 * std::pow(2.0, 1.75)));
  // Classical rank-one bound.
  CHECK(weil_gl2_bound(1, 1, PrimePower(5, 1)) == doctest::Approx(2.0 * std::sqrt(5.0)));
  CHECK(weil_gl2_bound(5, 10, PrimePower(5, 1)) == doctest::Approx(10.0));
  // A bound id refuses foreign cells.
  CHECK_THROWS_AS(bound_value(BoundId::Ab, CellParams(Weyl::BA, 3, 1, 2),
                              CharacterPair{1, 1, 1, 1}),
                  domain_error);
}

TEST_CASE("stationary phase report") {
  StationaryPhaseReport r3 = stationary_phase_report(3, 1, 1, 1, 1);
  CHECK(r3.d_count_mod_p == 2);
  CHECK(r3.min_rank == 2);
  CHECK(r3.t == 0);
  CHECK(r3.sum_magnitude == doctest::Approx(13.7888).epsilon(1e-3));
  CHECK(r3.bound == doctest::Approx(18.0));
  CHECK(r3.inequality_holds);

  StationaryPhaseReport r5 = stationary_phase_report(5, 1, 1, 1, 1);
  CHECK(r5.d_count_mod_p == 0);
  CHECK(r5.sum_magnitude == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r5.inequality_holds);

  StationaryPhaseReport r7 = stationary_phase_report(7, 1, 1, 1, 1);
  CHECK(r7.d_count_mod_p == 2);
  CHECK(r7.sum_magnitude == doctest::Approx(82.13).epsilon(1e-3));
  CHECK(r7.bound == doctest::Approx(98.0));
  CHECK(r7.inequality_holds);

  CHECK_THROWS_AS(stationary_phase_report(3, 3, 1, 1, 1), domain_error);
  CHECK_THROWS_AS(stationary_phase_report(2, 1, 1, 1, 1), domain_error);
}

TEST_CASE("ratio on the fixed small cell stays bounded") {
  KatzRatioReport rep = katz_ratio_report({3, 5, 7, 11});
  CHECK(rep.per_prime.size() == 4);
  CHECK(rep.max_ratio > 0.0);
  CHECK(rep.max_ratio < 10.0);
}
