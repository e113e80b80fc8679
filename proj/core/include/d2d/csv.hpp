#ifndef D2D_CSV_HPP
#define D2D_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "d2d/simulator.hpp"
#include "d2d/theory.hpp"

namespace d2d {

// Stable float formatting for CSV output: 12 significant digits.
std::string format_double(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by name; throws when absent.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);
void write_csv(std::ostream& out, const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);

// simulate schema: one row per sweep point, warning rows for skipped g_c.
extern const char* const kEstimateColumns[];
extern const std::size_t kEstimateColumnCount;
CsvTable estimates_table(const SweepResult& sweep);

// theory schema: source_tag, case_tag, p, t_normalized plus a params echo.
CsvTable curve_table(const TradeoffCurve& curve, const TheoryParams& params);

}  // namespace d2d

#endif  // D2D_CSV_HPP
