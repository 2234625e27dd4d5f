#include "klsp4/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace klsp4 {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Parses one TOML value from the subset: integer, boolean, "string", or a
// homogeneous array of those.
struct TomlValue {
  enum Kind { Int, Bool, Str, Array } kind;
  i64 i = 0;
  bool b = false;
  std::string s;
  std::vector<TomlValue> items;
};

TomlValue parse_value(const std::string& raw) {
  std::string v = strip(raw);
  if (v.empty()) throw domain_error("config: empty value");
  TomlValue out;
  if (v.front() == '[') {
    if (v.back() != ']') throw domain_error("config: unterminated array");
    out.kind = TomlValue::Array;
    std::string body = v.substr(1, v.size() - 2);
    std::string item;
    int depth = 0;
    bool in_str = false;
    for (char ch : body) {
      if (ch == '"') in_str = !in_str;
      if (!in_str) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
          if (!strip(item).empty()) out.items.push_back(parse_value(item));
          item.clear();
          continue;
        }
      }
      item += ch;
    }
    if (!strip(item).empty()) out.items.push_back(parse_value(item));
    return out;
  }
  if (v.front() == '"') {
    if (v.size() < 2 || v.back() != '"') throw domain_error("config: unterminated string");
    out.kind = TomlValue::Str;
    out.s = v.substr(1, v.size() - 2);
    return out;
  }
  if (v == "true" || v == "false") {
    out.kind = TomlValue::Bool;
    out.b = v == "true";
    return out;
  }
  out.kind = TomlValue::Int;
  size_t pos = 0;
  out.i = std::stoll(v, &pos);
  if (pos != v.size()) throw domain_error("config: bad integer value: " + v);
  return out;
}

std::vector<i64> int_list(const TomlValue& v, const std::string& key) {
  if (v.kind == TomlValue::Int) return {v.i};
  if (v.kind != TomlValue::Array) throw domain_error("config: " + key + " expects integers");
  std::vector<i64> out;
  for (const TomlValue& it : v.items) {
    if (it.kind != TomlValue::Int)
      throw domain_error("config: " + key + " expects integers");
    out.push_back(it.i);
  }
  return out;
}

std::vector<std::string> str_list(const TomlValue& v, const std::string& key) {
  if (v.kind == TomlValue::Str) return {v.s};
  if (v.kind != TomlValue::Array) throw domain_error("config: " + key + " expects strings");
  std::vector<std::string> out;
  for (const TomlValue& it : v.items) {
    if (it.kind != TomlValue::Str)
      throw domain_error("config: " + key + " expects strings");
    out.push_back(it.s);
  }
  return out;
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

std::string num_str(double x) { return ordered_json(x).dump(); }

ordered_json row_json(const ReportRow& row) {
  ordered_json j;
  j["cell"] = {{"w", weyl_name(row.cell.w)},
               {"p", row.cell.p},
               {"r", row.cell.r},
               {"s", row.cell.s}};
  j["chars"] = {{"m1", row.chars.m1},
                {"m2", row.chars.m2},
                {"n1", row.chars.n1},
                {"n2", row.chars.n2}};
  j["magnitude"] = row.magnitude;
  j["tally_digest"] = hex_digest(row.tally_digest);
  j["term_count"] = row.term_count;
  j["bound"] = {{"id", bound_name(row.bound_id)}, {"value", row.bound}};
  j["ratio"] = row.ratio;
  j["ms"] = row.ms;
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  SweepConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    // Drop comments outside strings.
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_str = !in_str;
      if (line[i] == '#' && !in_str) {
        line = line.substr(0, i);
        break;
      }
    }
    line = strip(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw domain_error("config: expected key = value: " + line);
    std::string key = strip(line.substr(0, eq));
    TomlValue v = parse_value(line.substr(eq + 1));
    if (key == "primes") cfg.primes = int_list(v, key);
    else if (key == "cells") cfg.cells = str_list(v, key);
    else if (key == "max_rs_norm") cfg.max_rs_norm = static_cast<int>(v.i);
    else if (key == "r_max") cfg.r_max = static_cast<int>(v.i);
    else if (key == "s_max") cfg.s_max = static_cast<int>(v.i);
    else if (key == "char_values") cfg.char_values = int_list(v, key);
    else if (key == "char_include_p") cfg.char_include_p = v.b;
    else if (key == "budget_terms") cfg.budget_terms = v.i;
    else if (key == "format") cfg.format = v.s;
    else if (key == "out") cfg.out = v.s;
    else throw domain_error("config: unknown key: " + key);
  }
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw domain_error("config: format must be json, csv, or text");
  return cfg;
}

std::vector<ReportRow> run_sweep(const SweepConfig& cfg) {
  std::vector<i64> primes = cfg.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::set<std::string> wanted(cfg.cells.begin(), cfg.cells.end());
  bool all_cells = wanted.count("all") > 0;

  std::vector<ReportRow> rows;
  for (i64 p : primes) {
    std::vector<i64> values = cfg.char_values;
    if (cfg.char_include_p) values.push_back(p);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    for (Weyl w : ALL_WEYL) {
      if (!all_cells && !wanted.count(weyl_name(w))) continue;
      for (int r = 0; r <= cfg.r_max; ++r)
        for (int s = 0; s <= cfg.s_max; ++s) {
          if (!admissible(w, r, s)) continue;
          double norm = std::pow(static_cast<double>(p), r + s);
          if (norm > static_cast<double>(cfg.max_rs_norm)) continue;
          CellParams c(w, p, r, s);
          for (i64 m1 : values)
            for (i64 m2 : values)
              for (i64 n1 : values)
                for (i64 n2 : values) {
                  ReportRow row{c, CharacterPair{m1, m2, n1, n2}};
                  row.bound_id = default_bound_for(w);
                  try {
                    Budget budget(cfg.budget_terms > 0 ? cfg.budget_terms
                                                       : default_term_budget());
                    KloostermanValue v = kl(c, row.chars, budget);
                    row.magnitude = v.tally.magnitude();
                    row.tally_digest = v.tally.digest();
                    row.term_count = v.term_count;
                    row.bound = bound_value(row.bound_id, c, row.chars);
                    row.ratio = row.bound > 0 ? row.magnitude / row.bound : 0.0;
                  } catch (const std::exception& e) {
                    row = ReportRow{c, CharacterPair{m1, m2, n1, n2}};
                    row.bound_id = default_bound_for(w);
                    row.error = e.what();
                  }
                  rows.push_back(row);
                }
        }
    }
  }
  return rows;
}

void write_jsonl(const std::vector<ReportRow>& rows, std::ostream& os) {
  for (const ReportRow& row : rows) os << row_json(row).dump() << "\n";
}

void write_csv(const std::vector<ReportRow>& rows, std::ostream& os) {
  os << "w,p,r,s,m1,m2,n1,n2,magnitude,tally_digest,term_count,bound_id,"
        "bound_value,ratio,ms,error\r\n";
  for (const ReportRow& row : rows) {
    os << weyl_name(row.cell.w) << ',' << row.cell.p << ',' << row.cell.r << ','
       << row.cell.s << ',' << row.chars.m1 << ',' << row.chars.m2 << ','
       << row.chars.n1 << ',' << row.chars.n2 << ',' << num_str(row.magnitude) << ','
       << hex_digest(row.tally_digest) << ',' << row.term_count << ','
       << bound_name(row.bound_id) << ',' << num_str(row.bound) << ','
       << num_str(row.ratio) << ',' << num_str(row.ms) << ',';
    // RFC 4180 quoting for the one free-text column.
    std::string e = row.error;
    if (e.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : e) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      quoted += '"';
      e = quoted;
    }
    os << e << "\r\n";
  }
}

void write_text(const std::vector<ReportRow>& rows, std::ostream& os) {
  for (const ReportRow& row : rows) {
    os << weyl_name(row.cell.w) << " p=" << row.cell.p << " r=" << row.cell.r
       << " s=" << row.cell.s << " chars=(" << row.chars.m1 << "," << row.chars.m2
       << "," << row.chars.n1 << "," << row.chars.n2 << ")";
    if (!row.error.empty()) {
      os << " error=" << row.error << "\n";
      continue;
    }
    os << " |Kl|=" << num_str(row.magnitude) << " terms=" << row.term_count
       << " bound[" << bound_name(row.bound_id) << "]=" << num_str(row.bound)
       << " ratio=" << num_str(row.ratio) << "\n";
  }
}

StationaryPhaseReport stationary_phase_report(i64 p, i64 m1, i64 m2, i64 n2, int j) {
  if (!is_prime(p) || p == 2) throw domain_error("stationary phase: need an odd prime");
  if (j < 1) throw domain_error("stationary phase: j must be >= 1");
  if (m1 % p == 0 || m2 % p == 0 || n2 % p == 0)
    throw domain_error("stationary phase: coefficients must be units");

  StationaryPhaseReport rep;
  rep.p = p;
  rep.m1 = m1;
  rep.m2 = m2;
  rep.n2 = n2;
  rep.j = j;
  rep.s = 2 * j;

  // Exact sum over unit pairs mod p^s of e((m1/x + m2 x^2/y + n2 y)/p^s).
  PrimePower ps(p, rep.s);
  CyclotomicTally tally(p, rep.s);
  for (i64 x : unit_residues(ps))
    for (i64 y : unit_residues(ps)) {
      i64 xin = inv_mod(x, ps.q), yin = inv_mod(y, ps.q);
      i64 t = mod_reduce(mul_mod(m1, xin, ps.q) +
                             mul_mod(mul_mod(m2, mul_mod(x, x, ps.q), ps.q), yin, ps.q) +
                             mul_mod(n2, y, ps.q),
                         ps.q);
      tally.add_phase(PhaseFrac{t, rep.s});
    }
  rep.sum_magnitude = tally.magnitude();

  // Critical sets: 2 m2 x^3 = m1 y and m2 x^2 = n2 y^2.
  auto count_d = [&](int level) {
    PrimePower pk(p, level);
    i64 cnt = 0;
    for (i64 x : unit_residues(pk))
      for (i64 y : unit_residues(pk)) {
        i64 x2 = mul_mod(x, x, pk.q);
        i64 lhs1 = mul_mod(mod_reduce(2 * m2, pk.q), mul_mod(x2, x, pk.q), pk.q);
        if (lhs1 != mul_mod(mod_reduce(m1, pk.q), y, pk.q)) continue;
        if (mul_mod(mod_reduce(m2, pk.q), x2, pk.q) !=
            mul_mod(mod_reduce(n2, pk.q), mul_mod(y, y, pk.q), pk.q))
          continue;
        ++cnt;
      }
    return cnt;
  };
  rep.d_count = count_d(j);
  rep.d_count_mod_p = count_d(1);

  // Hessian ranks mod p at the mod-p critical points.
  rep.min_rank = 2;
  rep.t = 0;
  PrimePower p1(p, 1);
  for (i64 x : unit_residues(p1))
    for (i64 y : unit_residues(p1)) {
      i64 x2 = mul_mod(x, x, p);
      if (mul_mod(mod_reduce(2 * m2, p), mul_mod(x2, x, p), p) !=
          mul_mod(mod_reduce(m1, p), y, p))
        continue;
      if (mul_mod(mod_reduce(m2, p), x2, p) !=
          mul_mod(mod_reduce(n2, p), mul_mod(y, y, p), p))
        continue;
      i64 xb = inv_mod(x, p), yb = inv_mod(y, p);
      i64 xb3 = mul_mod(mul_mod(xb, xb, p), xb, p);
      i64 yb2 = mul_mod(yb, yb, p), yb3 = mul_mod(yb2, yb, p);
      i64 h11 = mod_reduce(2 * (mul_mod(m1, xb3, p) + mul_mod(m2, yb, p)), p);
      i64 h12 = mod_reduce(-2 * mul_mod(mul_mod(m2, x, p), yb2, p), p);
      i64 h22 = mod_reduce(2 * mul_mod(mul_mod(m2, x2, p), yb3, p), p);
      i64 det = mod_reduce(mul_mod(h11, h22, p) - mul_mod(h12, h12, p), p);
      int rank = det != 0 ? 2 : (h11 || h12 || h22 ? 1 : 0);
      rep.min_rank = std::min(rep.min_rank, rank);
      rep.t = std::max(rep.t, 2 - rank);
    }
  rep.bound = static_cast<double>(rep.d_count) *
              std::pow(static_cast<double>(p), rep.s + rep.t / 2.0);
  rep.inequality_holds = rep.sum_magnitude <= rep.bound + 1e-6;
  return rep;
}

KatzRatioReport katz_ratio_report(const std::vector<i64>& primes) {
  KatzRatioReport rep;
  for (i64 p : primes) {
    CellParams c(Weyl::AB, p, 2, 1);
    double best = 0.0;
    for (i64 m1 : {static_cast<i64>(1), p - 1})
      for (i64 m2 : {static_cast<i64>(1), p - 1})
        for (i64 n2 : {static_cast<i64>(1), p - 1}) {
          KloostermanValue v = kl(c, CharacterPair{m1, m2, 0, n2});
          best = std::max(best, v.tally.magnitude() / static_cast<double>(p * p));
        }
    rep.per_prime.emplace_back(p, best);
    rep.max_ratio = std::max(rep.max_ratio, best);
  }
  return rep;
}

}  // namespace klsp4
