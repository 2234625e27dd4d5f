#include "klsp4/auxsum.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace klsp4 {

std::vector<RootFlow> ubar_root_flows(const CellParams& c) {
  Mat4 n = cell_matrix(c);
  Mat4 ninv = mat_inverse(n);
  std::vector<RootFlow> out;
  for (Root g : ubar_roots(c.w)) {
    UnipotentCoords u;
    u.set_coord(g, Rat(1));
    Mat4 m = mat_mul(mat_mul(n, unipotent_matrix(u)), ninv);
    RootFlow flow;
    flow.gamma = g;
    flow.lhs_m1 = m[0][1];
    flow.lhs_m2 = m[1][3];
    flow.rhs_n1 = g == Root::Alpha ? Rat(1) : Rat(0);
    flow.rhs_n2 = g == Root::Beta ? Rat(1) : Rat(0);
    out.push_back(flow);
  }
  return out;
}

bool is_well_defined(const CellParams& c, const CharacterPair& ch) {
  for (const RootFlow& f : ubar_root_flows(c)) {
    Rat lhs = Rat(ch.m1) * f.lhs_m1 + Rat(ch.m2) * f.lhs_m2;
    Rat rhs = Rat(ch.n1) * f.rhs_n1 + Rat(ch.n2) * f.rhs_n2;
    if (lhs != rhs) return false;
  }
  return true;
}

KloostermanValue aux_kl(const CellParams& c, const CharacterPair& ch) {
  if (!is_well_defined(c, ch))
    return KloostermanValue{CyclotomicTally(c.p, 0), 0, 0};
  return kl(c, ch);
}

namespace {

struct Affine {
  // e(r, s) = c0 + cr*r + cs*s
  i64 c0 = 0, cr = 0, cs = 0;

  bool is_zero() const { return c0 == 0 && cr == 0 && cs == 0; }
  bool operator==(const Affine& o) const {
    return c0 == o.c0 && cr == o.cr && cs == o.cs;
  }
};

std::string format_affine(const Affine& a) {
  std::string out;
  auto term = [&out](i64 coeff, const std::string& var) {
    if (coeff == 0) return;
    std::string mag =
        (std::abs(coeff) == 1 && !var.empty()) ? var : std::to_string(std::abs(coeff)) + var;
    if (out.empty())
      out = (coeff < 0 ? "-" : "") + mag;
    else
      out += (coeff < 0 ? " - " : " + ") + mag;
  };
  // Emit positive terms first so a mixed-sign expression reads "s - 2r"
  // rather than "-2r + s".
  std::array<std::pair<i64, const char*>, 3> parts{
      {{a.cr, "r"}, {a.cs, "s"}, {a.c0, ""}}};
  for (auto [coeff, var] : parts)
    if (coeff > 0) term(coeff, var);
  for (auto [coeff, var] : parts)
    if (coeff < 0) term(coeff, var);
  return out.empty() ? "0" : out;
}

// Exponents observed at sample cells, as one affine function of (r, s).
Affine fit_affine(const std::vector<std::array<int, 3>>& samples) {
  // samples: (r, s, e).  Solve by eliminating against the first sample.
  Affine a;
  if (samples.empty()) return a;
  if (samples.size() == 1) {
    a.c0 = samples[0][2];
    return a;
  }
  // Two or three samples: set up differences and solve the small system.
  std::vector<std::array<i64, 3>> rows;  // cr*dr + cs*ds = de
  for (size_t i = 1; i < samples.size(); ++i)
    rows.push_back({samples[i][0] - samples[0][0], samples[i][1] - samples[0][1],
                    samples[i][2] - samples[0][2]});
  i64 cr = 0, cs = 0;
  if (rows.size() == 1) {
    // One pinned direction: attribute the change to whichever variable moved.
    if (rows[0][0] != 0)
      cr = rows[0][2] / rows[0][0];
    else if (rows[0][1] != 0)
      cs = rows[0][2] / rows[0][1];
  } else {
    i64 det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    if (det == 0) throw domain_error("fit_affine: degenerate sample design");
    cr = (rows[0][2] * rows[1][1] - rows[0][1] * rows[1][2]) / det;
    cs = (rows[0][0] * rows[1][2] - rows[0][2] * rows[1][0]) / det;
  }
  a.cr = cr;
  a.cs = cs;
  a.c0 = samples[0][2] - cr * samples[0][0] - cs * samples[0][1];
  // Verify the fit reproduces every sample exactly.
  for (const auto& smp : samples)
    if (a.c0 + a.cr * smp[0] + a.cs * smp[1] != smp[2])
      throw domain_error("fit_affine: samples are not affine in (r, s)");
  return a;
}

std::vector<std::pair<int, int>> sample_cells(Weyl w) {
  switch (w) {
    case Weyl::Id: return {{0, 0}};
    case Weyl::A: return {{1, 0}, {2, 0}};
    case Weyl::B: return {{0, 1}, {0, 2}};
    case Weyl::AB: return {{1, 0}, {2, 0}, {1, 1}};
    case Weyl::BA: return {{0, 0}, {1, 2}, {1, 3}};
    case Weyl::ABA: return {{1, 1}, {2, 1}, {1, 2}};
    case Weyl::BAB: return {{1, 1}, {1, 2}, {2, 2}};
    case Weyl::W0: return {{1, 1}, {2, 1}, {1, 2}};
  }
  return {};
}

struct SymbolicClause {
  enum Kind { MZero, NZero, Equality } kind;
  int m_index = 0;  // 1 or 2 (0 if unused)
  int n_index = 0;
  int sign = 1;     // sign of the p-power coefficient in n = sign * m * p^e
  Affine exponent;

  std::string text() const {
    switch (kind) {
      case MZero: return "m" + std::to_string(m_index) + " = 0";
      case NZero: return "n" + std::to_string(n_index) + " = 0";
      case Equality: {
        std::string rhs = "m" + std::to_string(m_index);
        if (sign < 0) rhs = "-" + rhs;
        if (!exponent.is_zero()) rhs += " p^(" + format_affine(exponent) + ")";
        return "n" + std::to_string(n_index) + " = " + rhs;
      }
    }
    return "";
  }
};

}  // namespace

std::vector<ConditionTableRow> condition_table() {
  const i64 p = 3;  // exponents and signs do not depend on the prime
  std::vector<ConditionTableRow> rows;
  for (Weyl w : ALL_WEYL) {
    auto cells = sample_cells(w);
    // Flows per sample cell, in matching (root) order.
    std::vector<std::vector<RootFlow>> flows;
    for (auto [r, s] : cells) flows.push_back(ubar_root_flows(CellParams(w, p, r, s)));

    std::vector<SymbolicClause> clauses;
    const size_t nflows = flows.empty() ? 0 : flows[0].size();
    for (size_t i = 0; i < nflows; ++i) {
      // The conjugated side touches at most one character coordinate.
      const RootFlow& f0 = flows[0][i];
      if (f0.lhs_m1.num != 0 && f0.lhs_m2.num != 0)
        throw domain_error("condition_table: flow touches both coordinates");
      int m_index = f0.lhs_m1.num != 0 ? 1 : (f0.lhs_m2.num != 0 ? 2 : 0);
      int n_index = f0.rhs_n1.num != 0 ? 1 : (f0.rhs_n2.num != 0 ? 2 : 0);
      if (m_index == 0 && n_index == 0) continue;
      SymbolicClause cl;
      if (m_index == 0) {
        cl.kind = SymbolicClause::NZero;
        cl.n_index = n_index;
      } else if (n_index == 0) {
        cl.kind = SymbolicClause::MZero;
        cl.m_index = m_index;
      } else {
        cl.kind = SymbolicClause::Equality;
        cl.m_index = m_index;
        cl.n_index = n_index;
        std::vector<std::array<int, 3>> samples;
        for (size_t k = 0; k < cells.size(); ++k) {
          const Rat& coeff = m_index == 1 ? flows[k][i].lhs_m1 : flows[k][i].lhs_m2;
          if (coeff.num == 0)
            throw domain_error("condition_table: inconsistent zero pattern");
          samples.push_back({cells[k].first, cells[k].second, rat_val(coeff, p)});
          cl.sign = coeff.num < 0 ? -1 : 1;
        }
        cl.exponent = fit_affine(samples);
      }
      clauses.push_back(cl);
    }

    // Assemble the row text: equalities first, then the merged zero clauses.
    std::vector<std::string> parts;
    std::vector<std::string> clause_texts;
    for (const SymbolicClause& cl : clauses)
      if (cl.kind == SymbolicClause::Equality) {
        if (std::find(clause_texts.begin(), clause_texts.end(), cl.text()) ==
            clause_texts.end()) {
          if (cl.exponent.is_zero() && cl.sign > 0)
            parts.push_back("m" + std::to_string(cl.m_index) + " = n" +
                            std::to_string(cl.n_index));
          else
            parts.push_back(cl.text());
          clause_texts.push_back(cl.text());
        }
      }
    std::set<std::pair<int, int>> zeros;  // (0, i) for m_i, (1, j) for n_j
    for (const SymbolicClause& cl : clauses) {
      if (cl.kind == SymbolicClause::MZero) zeros.insert({0, cl.m_index});
      if (cl.kind == SymbolicClause::NZero) zeros.insert({1, cl.n_index});
    }
    if (!zeros.empty()) {
      std::string z;
      for (auto [side, idx] : zeros)
        z += (side == 0 ? "m" : "n") + std::to_string(idx) + " = ";
      z += "0";
      parts.push_back(z);
    }
    for (const SymbolicClause& cl : clauses) {
      std::string t = cl.text();
      if (std::find(clause_texts.begin(), clause_texts.end(), t) == clause_texts.end())
        clause_texts.push_back(t);
    }

    ConditionTableRow row;
    row.w = weyl_name(w);
    if (parts.empty())
      row.condition = "-";
    else {
      for (size_t i = 0; i < parts.size(); ++i)
        row.condition += (i ? ", " : "") + parts[i];
    }
    row.clauses = clause_texts;
    rows.push_back(row);
  }
  return rows;
}

std::string condition_table_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ConditionTableRow& row : condition_table()) {
    nlohmann::ordered_json obj;
    obj["w"] = row.w;
    obj["condition"] = row.condition;
    obj["clauses"] = row.clauses;
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

}  // namespace klsp4
