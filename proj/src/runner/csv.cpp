#include "qdghz/runner/csv.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qdghz/errors.hpp"

namespace qdghz {

std::string format_number(double x) {
  if (x == 0.0) return "0";  // also folds -0
  if (std::abs(x) < 1e-4) return fmt::format("{:.11e}", x);
  return fmt::format("{:.12g}", x);
}

void write_csv(std::ostream& out, const Trajectory& traj, bool scaled_time) {
  if (traj.rows.empty()) throw std::invalid_argument("write_csv: empty trajectory");
  const auto& m = traj.meta;
  const auto& p = m.params;
  out << "# " << m.version << '\n';
  out << "# solver: " << solver_name(m.solver) << '\n';
  out << "# eta: " << format_number(p.eta) << '\n';
  out << "# omega_rabi: " << format_number(p.omega_rabi) << '\n';
  out << "# delta: " << format_number(p.delta) << '\n';
  out << "# phi: " << format_number(p.phi) << '\n';
  out << "# tau: " << format_number(p.tau) << '\n';
  out << "# t_start: " << format_number(p.t_start) << '\n';
  out << "# t_end: " << format_number(p.t_end) << '\n';
  out << "# t_step: " << format_number(p.t_step) << '\n';
  out << "# initial_state: " << p.initial_state.describe();
  if (p.initial_state.kind() == InitialState::Kind::custom) {
    for (const auto& z : p.initial_state.state().amplitudes())
      out << ' ' << format_number(z.real()) << ',' << format_number(z.imag());
  }
  out << '\n';
  if (m.member) out << "# sweep: " << axis_name(m.member->axis) << " = " << format_number(m.member->value) << '\n';
  if (m.max_deviation) out << "# max_deviation: " << format_number(*m.max_deviation) << '\n';
  out << "# units: t in fs, rates in rad/fs\n";

  out << "t,re_b0,im_b0,re_b1,im_b1,re_b2,im_b2,re_b3,im_b3,p0,p1,p2,p3,p_ghz,p_ghz_max";
  if (scaled_time) out << ",omega_t";
  out << '\n';
  for (const auto& row : traj.rows) {
    out << format_number(row.t);
    for (const auto& z : row.b) out << ',' << format_number(z.real()) << ',' << format_number(z.imag());
    for (double v : row.p) out << ',' << format_number(v);
    out << ',' << format_number(row.p_ghz) << ',' << format_number(row.p_ghz_max);
    if (scaled_time) out << ',' << format_number(p.omega_rabi * row.t);
    out << '\n';
  }
}

void emit_csv(const std::filesystem::path& path, const Trajectory& traj, bool scaled_time) {
  std::ostringstream buffer;
  write_csv(buffer, traj, scaled_time);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << buffer.str();
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw std::out_of_range("no column '" + name + "'");
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      table.metadata.push_back(line.size() > 1 && line[1] == ' ' ? line.substr(2) : line.substr(1));
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (table.columns.empty()) {
      table.columns = std::move(cells);
      continue;
    }
    if (cells.size() != table.columns.size()) throw std::runtime_error("read_csv: ragged row");
    std::vector<double> row;
    for (const auto& c : cells) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc{} || ptr != c.data() + c.size()) throw std::runtime_error("read_csv: bad number '" + c + "'");
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace qdghz
