// Command-line driver: evaluate one cell sum, run parameter sweeps, run the
// verification suite, diff the closed-form evaluation against the
// enumeration oracle, and emit the character-compatibility table.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "klsp4/auxsum.hpp"
#include "klsp4/bounds.hpp"
#include "klsp4/oracle.hpp"
#include "klsp4/report.hpp"
#include "klsp4/sums.hpp"
#include "klsp4/verify.hpp"

namespace {

using klsp4::i64;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;

struct CellArgs {
  i64 prime = 3;
  std::string weyl = "w0";
  int r = 0, s = 0;
  i64 m1 = 1, m2 = 1, n1 = 1, n2 = 1;
};

void add_cell_options(CLI::App* cmd, CellArgs& args) {
  cmd->add_option("--prime", args.prime, "prime p");
  cmd->add_option("--weyl", args.weyl, "cell: id a b ab ba aba bab w0");
  cmd->add_option("--r", args.r, "first exponent");
  cmd->add_option("--s", args.s, "second exponent");
  cmd->add_option("--m1", args.m1, "left character, first coordinate");
  cmd->add_option("--m2", args.m2, "left character, second coordinate");
  cmd->add_option("--n1", args.n1, "right character, first coordinate");
  cmd->add_option("--n2", args.n2, "right character, second coordinate");
}

klsp4::Weyl weyl_or_throw(const std::string& name) {
  auto w = klsp4::weyl_from_name(name);
  if (!w) throw klsp4::domain_error("unknown cell name: " + name);
  return *w;
}

std::string hex_digest(std::uint64_t d) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[d & 0xf];
    d >>= 4;
  }
  return out;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw klsp4::domain_error("cannot open output file: " + path);
  return file;
}

int run_compute(const CellArgs& args, const std::string& format, i64 budget_terms,
                const std::string& out_path) {
  klsp4::CellParams c(weyl_or_throw(args.weyl), args.prime, args.r, args.s);
  klsp4::CharacterPair ch{args.m1, args.m2, args.n1, args.n2};
  klsp4::Budget budget(budget_terms > 0 ? budget_terms : klsp4::default_term_budget());
  klsp4::KloostermanValue v = klsp4::kl(c, ch, budget);
  klsp4::BoundId bid = klsp4::default_bound_for(c.w);
  double bound = klsp4::bound_value(bid, c, ch);
  double mag = v.tally.magnitude();

  std::ofstream file;
  std::ostream& os = open_out(out_path, file);
  if (format == "json" || format == "csv") {
    ordered_json j;
    j["cell"] = {{"w", klsp4::weyl_name(c.w)}, {"p", c.p}, {"r", c.r}, {"s", c.s}};
    j["chars"] = {{"m1", ch.m1}, {"m2", ch.m2}, {"n1", ch.n1}, {"n2", ch.n2}};
    j["magnitude"] = mag;
    j["tally_digest"] = hex_digest(v.tally.digest());
    j["term_count"] = v.term_count;
    j["bound"] = {{"id", klsp4::bound_name(bid)}, {"value", bound}};
    j["ratio"] = bound > 0 ? mag / bound : 0.0;
    j["ms"] = 0.0;
    os << j.dump() << "\n";
  } else {
    klsp4::CyclotomicTally canon = v.tally.canonical();
    os << "cell " << klsp4::weyl_name(c.w) << " p=" << c.p << " r=" << c.r
       << " s=" << c.s << " chars=(" << ch.m1 << "," << ch.m2 << "," << ch.n1 << ","
       << ch.n2 << ")\n";
    os << "|Kl| = " << mag << "  terms = " << v.term_count << "\n";
    os << "bound[" << klsp4::bound_name(bid) << "] = " << bound << "  ratio = "
       << (bound > 0 ? mag / bound : 0.0) << "\n";
    os << "tally (level " << canon.level() << "):";
    for (size_t t = 0; t < canon.counts().size(); ++t)
      if (canon.counts()[t] != 0) os << " " << t << ":" << canon.counts()[t];
    os << "\n";
  }
  return kExitOk;
}

int run_sweep_cmd(const klsp4::SweepConfig& cfg) {
  std::vector<klsp4::ReportRow> rows = klsp4::run_sweep(cfg);
  std::ofstream file;
  std::ostream& os = open_out(cfg.out, file);
  if (cfg.format == "csv")
    klsp4::write_csv(rows, os);
  else if (cfg.format == "text")
    klsp4::write_text(rows, os);
  else
    klsp4::write_jsonl(rows, os);
  for (const klsp4::ReportRow& row : rows)
    if (!row.error.empty()) {
      std::cerr << "sweep: " << rows.size() << " rows, some with errors\n";
      return kExitVerifyFailure;
    }
  return kExitOk;
}

int run_verify() {
  bool all_pass = true;
  for (const klsp4::CheckResult& res : klsp4::run_all_checks()) {
    std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.name << ": " << res.details
              << "\n";
    all_pass = all_pass && res.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFailure;
}

int run_oracle_diff(const CellArgs& args, i64 budget_terms) {
  klsp4::CellParams c(weyl_or_throw(args.weyl), args.prime, args.r, args.s);
  klsp4::CharacterPair ch{args.m1, args.m2, args.n1, args.n2};
  klsp4::Budget b1(budget_terms > 0 ? budget_terms : klsp4::default_term_budget());
  klsp4::KloostermanValue direct = klsp4::kl(c, ch, b1);
  klsp4::Budget b2(budget_terms > 0 ? budget_terms : klsp4::default_term_budget());
  std::vector<klsp4::OracleCell> cells = klsp4::enumerate_X(c, klsp4::DenominatorCap{}, b2);
  klsp4::KloostermanValue oracle = klsp4::oracle_kl_from_cells(cells, c, ch);

  bool same = direct.tally.equals(oracle.tally) &&
              direct.term_count == oracle.term_count && direct.skipped_unsolvable == 0;
  std::cout << "closed form: |Kl| = " << direct.tally.magnitude()
            << "  terms = " << direct.term_count
            << "  digest = " << hex_digest(direct.tally.digest()) << "\n";
  std::cout << "enumeration: |Kl| = " << oracle.tally.magnitude()
            << "  terms = " << oracle.term_count
            << "  digest = " << hex_digest(oracle.tally.digest()) << "\n";
  std::cout << (same ? "MATCH" : "MISMATCH") << "\n";
  return same ? kExitOk : kExitVerifyFailure;
}

int run_table(const std::string& format, const std::string& out_path) {
  std::ofstream file;
  std::ostream& os = open_out(out_path, file);
  if (format == "text") {
    for (const klsp4::ConditionTableRow& row : klsp4::condition_table())
      os << row.w << ": " << row.condition << "\n";
  } else {
    os << klsp4::condition_table_json();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic rank-two Kloosterman sums"};
  app.require_subcommand(1);

  CellArgs cell_args;
  std::string format = "text";
  i64 budget_terms = 0;
  std::string out_path;
  std::string config_path;

  CLI::App* compute = app.add_subcommand("compute", "evaluate one cell sum exactly");
  add_cell_options(compute, cell_args);
  compute->add_option("--format", format, "json, csv, or text");
  compute->add_option("--budget-terms", budget_terms, "term budget override");
  compute->add_option("--out", out_path, "output file");

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a grid of cells");
  sweep->add_option("--config", config_path, "TOML sweep configuration file");
  sweep->add_option("--format", format, "json, csv, or text");
  sweep->add_option("--budget-terms", budget_terms, "term budget override");
  sweep->add_option("--out", out_path, "output file");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  (void)verify;

  CLI::App* diff = app.add_subcommand("oracle-diff",
                                      "compare closed form against enumeration");
  add_cell_options(diff, cell_args);
  diff->add_option("--budget-terms", budget_terms, "term budget override");

  CLI::App* table = app.add_subcommand("table", "emit the compatibility table");
  table->add_option("--format", format, "json or text");
  table->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (compute->parsed()) return run_compute(cell_args, format, budget_terms, out_path);
    if (sweep->parsed()) {
      klsp4::SweepConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw klsp4::domain_error("cannot read config: " + config_path);
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = klsp4::parse_sweep_config(buf.str());
      }
      if (sweep->count("--format")) cfg.format = format;
      if (sweep->count("--budget-terms")) cfg.budget_terms = budget_terms;
      if (sweep->count("--out")) cfg.out = out_path;
      return run_sweep_cmd(cfg);
    }
    if (verify->parsed()) return run_verify();
    if (diff->parsed()) return run_oracle_diff(cell_args, budget_terms);
    if (table->parsed()) return run_table(format, out_path);
  } catch (const klsp4::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const klsp4::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
