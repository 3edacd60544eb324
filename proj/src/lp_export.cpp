#include "crossdock/lp_export.hpp"

#include <fmt/format.h>

namespace crossdock {

namespace {

std::string Y(int i, int k) { return fmt::format("y_{}_{}", i + 1, k + 1); }

std::string Z(int i, int j, int k, int l) {
  return fmt::format("z_{}_{}_{}_{}", i + 1, j + 1, k + 1, l + 1);
}

std::string Num(double v) { return fmt::format("{:.17g}", v); }

// " + 3 x" / " - 3 x"
std::string Term(double coef, const std::string& var) {
  if (coef < 0.0) return fmt::format(" - {} {}", Num(-coef), var);
  return fmt::format(" + {} {}", Num(coef), var);
}

class Writer {
 public:
  void Row(const std::string& name, const std::string& body) {
    rows_ += fmt::format(" {}: {}\n", name, body);
    ++count_;
  }
  const std::string& text() const { return rows_; }
  int count() const { return count_; }

 private:
  std::string rows_;
  int count_ = 0;
};

}  // namespace

std::string lp_file_name(const Instance& inst, Formulation form) {
  const std::string base = inst.name.empty() ? "instance" : inst.name;
  return fmt::format("{}__{}.lp", base, to_string(form));
}

LpDocument emit_lp(const Instance& inst, Formulation form) {
  require_valid(inst);
  const Precedence xhat(inst);
  const auto events = event_times(inst);
  const bool literal = inst.self_flows == SelfFlows::kLiteral;
  const bool crossdock = form == Formulation::kCrossDock;
  const int n = inst.n;
  const int m = inst.m;

  LpDocument doc;
  doc.objective_constant = total_penalty_constant(inst);

  // Transfer variables in (i, j, k, l) order.
  std::vector<Transfer> zvars;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (inst.includes_pair(i, j))
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) zvars.push_back({i, j, k, l});
  doc.y_variable_count = n * m;
  doc.z_variable_count = static_cast<int>(zvars.size());
  doc.variable_count = doc.y_variable_count + doc.z_variable_count;

  std::string objective = "Minimize\n obj:";
  for (const auto& t : zvars) {
    const double coef = inst.transfer_cost(t.k, t.l) * inst.transfer_time(t.k, t.l) -
                        inst.penalty(t.i, t.j) * inst.flow(t.i, t.j);
    objective += "\n   " + Term(coef, Z(t.i, t.j, t.k, t.l));
  }
  if (zvars.empty()) objective += " 0 " + Y(0, 0);
  objective += "\n";

  Writer rows;
  for (int i = 0; i < n; ++i) {
    std::string body;
    for (int k = 0; k < m; ++k) body += (k ? " + " : "") + Y(i, k);
    rows.Row(fmt::format("dock_unique_{}", i + 1), body + " <= 1");
  }
  const bool link_diagonal = !crossdock;
  for (const auto& t : zvars) {
    if (t.i == t.j && !link_diagonal) continue;
    rows.Row(fmt::format("link_i_{}_{}_{}_{}", t.i + 1, t.j + 1, t.k + 1, t.l + 1),
             Z(t.i, t.j, t.k, t.l) + " - " + Y(t.i, t.k) + " <= 0");
  }
  for (const auto& t : zvars) {
    if (t.i == t.j && !link_diagonal) continue;
    rows.Row(fmt::format("link_j_{}_{}_{}_{}", t.i + 1, t.j + 1, t.k + 1, t.l + 1),
             Z(t.i, t.j, t.k, t.l) + " - " + Y(t.j, t.l) + " <= 0");
  }
  if (crossdock) {
    for (const auto& t : zvars) {
      if (t.i == t.j) continue;
      rows.Row(fmt::format("pair_forcing_{}_{}_{}_{}", t.i + 1, t.j + 1, t.k + 1, t.l + 1),
               Y(t.i, t.k) + " + " + Y(t.j, t.l) + " - " + Z(t.i, t.j, t.k, t.l) + " <= 1");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int bound = (xhat(i, j) ? 1 : 0) + (crossdock && xhat(j, i) ? 1 : 0);
      for (int k = 0; k < m; ++k)
        rows.Row(fmt::format("same_dock_{}_{}_{}", i + 1, j + 1, k + 1),
                 fmt::format("{} <= {}", Z(i, j, k, k), bound));
    }
  }
  const double cap = inst.effective_capacity();
  for (std::size_t r = 0; r < events.size(); ++r) {
    std::string body;
    for (const auto& t : zvars) {
      const double w = capacity_weight(inst, t.i, t.j, events[r]);
      if (w != 0.0) body += Term(w, Z(t.i, t.j, t.k, t.l));
    }
    if (body.empty()) body = " + 0 " + Y(0, 0);
    rows.Row(fmt::format("capacity_{}", r + 1), body.substr(1) + " <= " + Num(cap));
  }
  if (!crossdock) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int rhs = 1 + (xhat(i, j) ? 1 : 0) + (xhat(j, i) ? 1 : 0);
        for (int k = 0; k < m; ++k)
          rows.Row(fmt::format("dock_conflict_{}_{}_{}", i + 1, j + 1, k + 1),
                   fmt::format("{} + {} <= {}", Y(i, k), Y(j, k), rhs));
      }
  }
  if (crossdock && literal) {
    // Unlinked diagonal transfers: one (k, l) per truck at most.
    for (int i = 0; i < n; ++i) {
      std::string body;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) body += (body.empty() ? "" : " + ") + Z(i, i, k, l);
      rows.Row(fmt::format("self_single_{}", i + 1), body + " <= 1");
    }
  }
  doc.constraint_count = rows.count();

  std::string bounds = "Bounds\n";
  for (const auto& t : zvars) {
    if (t.i == t.j) continue;
    const double margin = time_margin(inst, t.i, t.j, t.k, t.l);
    const bool fixed = crossdock ? inst.flow(t.i, t.j) > 0.0 && margin < -kEps
                                 : margin <= kEps;
    if (!fixed) continue;
    bounds += fmt::format(" {} = 0\n", Z(t.i, t.j, t.k, t.l));
    ++doc.fixed_count;
  }

  std::string binaries = "Binaries\n";
  int on_line = 0;
  auto add_binary = [&](const std::string& var) {
    binaries += " " + var;
    if (++on_line == 8) {
      binaries += "\n";
      on_line = 0;
    }
  };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) add_binary(Y(i, k));
  for (const auto& t : zvars) add_binary(Z(t.i, t.j, t.k, t.l));
  if (on_line) binaries += "\n";

  std::string header;
  header += fmt::format("\\ model: {}\n", inst.name.empty() ? "instance" : inst.name);
  header += fmt::format("\\ formulation: {}\n", to_string(form));
  header += fmt::format("\\ self flows: {}\n", literal ? "literal" : "excluded");
  header += fmt::format("\\ objective constant: {}\n", Num(doc.objective_constant));
  header += fmt::format("\\ variables: {} ({} y, {} z)\n", doc.variable_count,
                        doc.y_variable_count, doc.z_variable_count);
  header += fmt::format("\\ constraints: {}, fixings: {}\n", doc.constraint_count,
                        doc.fixed_count);

  doc.text = header + objective + "Subject To\n" + rows.text() + bounds + binaries + "End\n";
  return doc;
}

}  // namespace crossdock
