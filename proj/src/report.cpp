#include "hodd/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "hodd/errors.hpp"
#include "hodd/json_util.hpp"
#include "hodd/parallel.hpp"
#include "hodd/sampling.hpp"

namespace hodd {

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw DomainError("unsupported report format '" + s + "'");
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_number(const ExtReal& v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return format_number(v.value());
}

std::string emit_json(nlohmann::json j) {
  round_numbers(j);
  return j.dump(2) + "\n";
}

namespace {

std::string verdict_line(const std::string& name, const TriState& t) {
  std::string s = name + ": " + to_string(t.verdict);
  if (t.witness) {
    s += " witness=(";
    for (std::size_t i = 0; i < t.witness->size(); ++i)
      s += (i ? "," : "") + format_number((*t.witness)[i]);
    s += ")";
  }
  if (!t.note.empty()) s += " [" + t.note + "]";
  return s + "\n";
}

}  // namespace

std::string emit_report(const PointReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return emit_json(report);
    case ReportFormat::csv: {
      std::string out = "family,order,value,sign\n";
      for (const auto& [fam, m] : report.tables)
        for (const auto& [k, e] : m)
          out += fam + "," + std::to_string(k) + "," + format_number(e.value) + "," +
                 to_string(e.sign) + "\n";
      return out;
    }
    case ReportFormat::text: {
      std::string out = "point:";
      for (double v : report.point) out += " " + format_number(v);
      out += "\n";
      for (const auto& [fam, m] : report.tables)
        for (const auto& [k, e] : m)
          out += fam + " order " + std::to_string(k) + ": " + format_number(e.value) + " (" +
                 to_string(e.sign) + ")\n";
      out += "stationary_order: " + std::to_string(report.stationary_order) +
             (report.stationary_inconclusive ? " (next order undecided)" : "") + "\n";
      out += verdict_line("necessary_n", report.necessary);
      out += verdict_line("strict_sufficient", report.strict_sufficient.result);
      for (const auto& [k, t] : report.isolated)
        out += verdict_line("isolated_" + std::to_string(k), t);
      out += "least_isolated_order: " + to_string(report.least_status);
      if (report.least_order) out += " " + std::to_string(*report.least_order);
      return out + "\n";
    }
  }
  throw DomainError("unsupported report format");
}

std::vector<SweepRow> sweep(const FunctionSpec& f, std::span<const double> x, int n,
                            int directions, const LiminfSchedule& sched) {
  if (n < 1) throw DomainError("order must be >= 1");
  if (directions < 1) throw DomainError("directions must be >= 1");
  const std::vector<Point> dirs = sphere_directions(f.dim(), directions, sched.seed);
  const MultiplierChain chain = MultiplierChain::zero(n, f.dim());
  return parallel_map(dirs.size(), [&](std::size_t i) {
    const DerivEstimate h = hadamard_deriv(f, x, chain, dirs[i], sched);
    const DerivEstimate s = studniarski_deriv(f, x, n, dirs[i], sched);
    return SweepRow{dirs[i], h.value, s.value, h.sign};
  });
}

std::string emit_sweep_csv(const std::vector<SweepRow>& rows, int dim) {
  std::string out;
  for (int i = 1; i <= dim; ++i) out += "u" + std::to_string(i) + ",";
  out += "hadamard,studniarski,sign\n";
  for (const SweepRow& r : rows) {
    for (double v : r.direction) out += format_number(v) + ",";
    out += format_number(r.hadamard) + "," + format_number(r.studniarski) + "," +
           to_string(r.sign) + "\n";
  }
  return out;
}

std::string emit_condition_table_text(const ConditionTable& table) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "cond";
  for (int k = 1; k <= table.max_n; ++k) os << std::setw(14) << ("k=" + std::to_string(k));
  os << "\n";
  for (const auto& [fam, cells] : table.rows) {
    os << std::setw(8) << fam;
    for (const ConditionCell& c : cells) os << std::setw(14) << to_string(c.status);
    os << "\n";
  }
  std::string s = os.str();
  // Drop trailing padding on each line.
  std::string out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

}  // namespace hodd
