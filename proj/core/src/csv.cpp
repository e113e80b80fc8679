#include "d2d/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace d2d {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw std::runtime_error("csv: missing column '" + name + "'");
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.emplace_back();
    if (line_no == 1) {
      table.header = std::move(fields);
    } else {
      if (fields.size() != table.header.size())
        throw std::runtime_error("csv: row " + std::to_string(line_no) + " has " +
                                 std::to_string(fields.size()) + " fields, expected " +
                                 std::to_string(table.header.size()));
      table.rows.push_back(std::move(fields));
    }
  }
  if (table.header.empty()) throw std::runtime_error("csv: empty input");
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open '" + path + "'");
  return read_csv(in);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << table.header[i] << (i + 1 < table.header.size() ? "," : "\n");
  for (const auto& row : table.rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? "," : "\n");
}

void write_csv_file(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("csv: cannot write '" + path + "'");
  write_csv(out, table);
}

const char* const kEstimateColumns[] = {
    "n",        "m",      "gamma_r",  "g_c",       "Delta",
    "K",        "K_overridden", "caching_kind", "trials",    "seed",
    "p_hat",    "p_ci95", "tmin_hat", "tmin_ci95", "tmin_diag_minuser",
    "analytic_outage", "status"};
const std::size_t kEstimateColumnCount = sizeof(kEstimateColumns) / sizeof(kEstimateColumns[0]);

CsvTable estimates_table(const SweepResult& sweep) {
  CsvTable table;
  table.header.assign(kEstimateColumns, kEstimateColumns + kEstimateColumnCount);
  for (const TradeoffEstimate& est : sweep.points) {
    const SimConfig& cfg = est.config;
    table.rows.push_back({
        std::to_string(cfg.n),
        std::to_string(cfg.m),
        format_double(cfg.gamma_r),
        std::to_string(cfg.g_c),
        format_double(cfg.delta),
        std::to_string(est.K),
        est.K_overridden ? "1" : "0",
        caching_kind_label(cfg.caching, cfg.gamma_c),
        std::to_string(cfg.trials),
        std::to_string(cfg.seed),
        format_double(est.p_hat),
        format_double(est.p_ci),
        format_double(est.t_min_hat),
        format_double(est.t_ci),
        format_double(est.t_min_diag),
        format_double(est.analytic_p),
        "ok",
    });
  }
  for (const SweepSkip& skip : sweep.skipped) {
    std::vector<std::string> row(kEstimateColumnCount, "");
    row[3] = std::to_string(skip.g_c);
    row[kEstimateColumnCount - 1] = "skipped: " + skip.reason;
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable curve_table(const TradeoffCurve& curve, const TheoryParams& params) {
  CsvTable table;
  table.header = {"source_tag", "case_tag", "p", "t_normalized", "n",
                  "m",          "gamma_r",  "K", "C",            "Delta"};
  for (const CurvePoint& point : curve.points) {
    table.rows.push_back({
        curve_source_label(point.source),
        point.case_tag > 0 ? "case" + std::to_string(point.case_tag) : "-",
        format_double(point.p),
        format_double(point.t / params.C),
        std::to_string(params.n),
        std::to_string(params.m),
        format_double(params.gamma_r),
        std::to_string(params.K),
        format_double(params.C),
        format_double(params.delta),
    });
  }
  return table;
}

}  // namespace d2d
