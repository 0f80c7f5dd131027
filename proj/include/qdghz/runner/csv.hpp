#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdghz/runner/simulation.hpp"

namespace qdghz {

/// 12 significant digits; lowercase scientific when 0 < |x| < 1e-4.
std::string format_number(double x);

void write_csv(std::ostream& out, const Trajectory& traj, bool scaled_time = false);
/// Throws IoError with the path on failure.
void emit_csv(const std::filesystem::path& path, const Trajectory& traj, bool scaled_time = false);

struct CsvTable {
  std::vector<std::string> metadata;  // `#` lines without the marker
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Throws std::out_of_range for an unknown column.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);

}  // namespace qdghz
