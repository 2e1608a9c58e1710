#pragma once

#include <string>
#include <vector>

#include "hodd/classify.hpp"
#include "hodd/deriv.hpp"
#include "hodd/function_spec.hpp"
#include "hodd/invex.hpp"

namespace hodd {

enum class ReportFormat { json, csv, text };

// Throws DomainError for anything other than "json", "csv" or "text".
ReportFormat report_format_from_string(const std::string& s);

// %.12g, with "+inf" / "-inf" for infinities.
std::string format_number(double v);
std::string format_number(const ExtReal& v);

// Deterministic rendering: sorted keys, 12 significant digits.
std::string emit_report(const PointReport& report, ReportFormat format);

// Two-space indented JSON with numbers rounded to 12 significant digits.
std::string emit_json(nlohmann::json j);

struct SweepRow {
  Point direction;
  ExtReal hadamard;
  ExtReal studniarski;
  Sign sign = Sign::inconclusive;
};

// Zero-chain order-n estimates on `directions` sampled unit directions.
std::vector<SweepRow> sweep(const FunctionSpec& f, std::span<const double> x, int n,
                            int directions, const LiminfSchedule& sched);

// Header u1,...,ud,hadamard,studniarski,sign then one row per direction.
std::string emit_sweep_csv(const std::vector<SweepRow>& rows, int dim);

// One aligned line per family, one column per order.
std::string emit_condition_table_text(const ConditionTable& table);

}  // namespace hodd
