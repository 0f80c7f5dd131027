#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "qdghz/errors.hpp"
#include "qdghz/runner/config.hpp"
#include "qdghz/runner/csv.hpp"
#include "qdghz/runner/simulation.hpp"
#include "qdghz/runner/svg.hpp"
#include "qdghz/runner/validation.hpp"

using namespace qdghz;

namespace {

double max_excursion(const Trajectory& traj) {
  double d = 0.0;
  for (const auto& row : traj.rows) d = std::max(d, std::abs(row.p_ghz - 0.5));
  return d;
}

std::string csv_text(const Trajectory& traj, bool scaled = false) {
  std::ostringstream out;
  write_csv(out, traj, scaled);
  return out.str();
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("time grid") {
  SystemParams p;
  p.t_start = 0.0;
  p.t_end = 1.0;
  p.t_step = 0.1;
  const auto t = time_grid(p);
  REQUIRE(t.size() == 11);
  CHECK(t.back() == doctest::Approx(1.0));
  p.t_end = 500.0;
  p.t_step = 0.5;
  CHECK(time_grid(p).size() == 1001);
  p.t_start = 1.0;
  p.t_end = 1.7;
  p.t_step = 0.5;
  CHECK(time_grid(p) == std::vector<double>{1.0, 1.5});
}

TEST_CASE("undriven run stays at one half") {
  SystemParams p;
  p.omega_rabi = 0.0;
  const auto traj = simulate(p, Solver::spectral);
  for (const auto& row : traj.rows) CHECK(std::abs(row.p_ghz - 0.5) < 1e-15);
}

TEST_CASE("weak drive stays near one half; detuning shrinks the excursion") {
  SystemParams weak;
  weak.omega_rabi = 0.01;
  CHECK(max_excursion(simulate(weak, Solver::spectral)) < 0.1);

  SystemParams slight = weak, far = weak;
  slight.omega_rabi = far.omega_rabi = 0.05;
  slight.delta = 0.01;
  far.delta = 0.3;
  CHECK(max_excursion(simulate(far, Solver::spectral)) < max_excursion(simulate(slight, Solver::spectral)));
}

TEST_CASE("trajectory rows are ordered and bounded") {
  const auto trajs = run_simulation(fig1_config());
  REQUIRE(trajs.size() == 4);
  for (const auto& traj : trajs) {
    for (std::size_t i = 1; i < traj.rows.size(); ++i) CHECK(traj.rows[i].t > traj.rows[i - 1].t);
    for (const auto& row : traj.rows) {
      CHECK(row.p_ghz >= 0.0);
      CHECK(row.p_ghz <= row.p_ghz_max + 1e-15);
      CHECK(row.p_ghz_max <= 1.0);
      double sum = 0.0;
      for (double v : row.p) sum += v;
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
  CHECK(trajs[0].meta.member->value == 0.1);
  CHECK(trajs[3].meta.member->value == 0.01);
}

TEST_CASE("sweep members equal individual runs row for row") {
  auto cfg = fig2_config();
  const auto swept = run_simulation(cfg);
  const auto members = cfg.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto single = cfg;
    single.sweep.reset();
    single.params = members[members.size() - 1 - i];
    const auto alone = run_simulation(single);
    REQUIRE(alone.size() == 1);
    const auto& a = alone[0].rows;
    const auto& b = swept[members.size() - 1 - i].rows;
    REQUIRE(a.size() == b.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
      CHECK(a[n].b == b[n].b);
      CHECK(a[n].p_ghz == b[n].p_ghz);
    }
  }
}

TEST_CASE("validated runs record the propagator deviation") {
  auto cfg = fig1_config();
  cfg.validate = true;
  cfg.sweep->values = {0.1};
  cfg.params.t_end = 100.0;
  const auto trajs = run_simulation(cfg);
  REQUIRE(trajs[0].meta.max_deviation.has_value());
  CHECK(*trajs[0].meta.max_deviation < 1e-8);

  cfg.solver = Solver::oracle;
  const auto by_oracle = run_simulation(cfg);
  CHECK(*by_oracle[0].meta.max_deviation == doctest::Approx(*trajs[0].meta.max_deviation).epsilon(1e-12));
}

TEST_CASE("undriven deviation is integrator error only") {
  SystemParams p;
  p.omega_rabi = 0.0;
  CHECK(propagator_deviation(p) < 1e-9);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(123.25) == "123.25");
  CHECK(format_number(2.5e-5) == "2.50000000000e-05");
  CHECK(format_number(-1.0e-7) == "-1.00000000000e-07");
  CHECK(format_number(1e-4) == "0.0001");
}

TEST_CASE("CSV contract") {
  SystemParams p;
  p.t_end = 0.5;
  p.t_step = 1.0;
  const auto traj = simulate(p, Solver::spectral);
  REQUIRE(traj.rows.size() == 1);
  const auto text = csv_text(traj);
  std::istringstream in(text);
  const auto table = read_csv(in);
  CHECK(table.rows.size() == 1);
  CHECK(table.columns == std::vector<std::string>{"t", "re_b0", "im_b0", "re_b1", "im_b1", "re_b2", "im_b2",
                                                  "re_b3", "im_b3", "p0", "p1", "p2", "p3", "p_ghz", "p_ghz_max"});
  CHECK(text.rfind("# qdghz", 0) == 0);
  // Metadata strictly precedes the header.
  const auto header = text.find("\nt,");
  CHECK(text.find('#', header) == std::string::npos);
  CHECK(std::find(table.metadata.begin(), table.metadata.end(), "solver: spectral") != table.metadata.end());

  const auto scaled = csv_text(traj, true);
  std::istringstream in2(scaled);
  CHECK(read_csv(in2).columns.back() == "omega_t");
}

TEST_CASE("CSV round trip keeps twelve significant digits") {
  SystemParams p;
  p.omega_rabi = 0.1;
  p.delta = 0.02;
  p.phi = 0.3;
  p.t_end = 60.0;
  auto traj = simulate(p, Solver::spectral, {}, true);
  std::istringstream in(csv_text(traj));
  const auto table = read_csv(in);
  REQUIRE(table.rows.size() == traj.rows.size());
  const auto col = table.column("p_ghz");
  const auto re3 = table.column("re_b3");
  for (std::size_t n = 0; n < traj.rows.size(); ++n) {
    const double v = traj.rows[n].p_ghz;
    CHECK(std::abs(table.rows[n][col] - v) <= 5e-12 * std::abs(v));
    const double b = traj.rows[n].b[3].real();
    CHECK(std::abs(table.rows[n][re3] - b) <= 5e-12 * std::abs(b));
  }
  CHECK(std::any_of(table.metadata.begin(), table.metadata.end(),
                    [](const std::string& m) { return m.rfind("max_deviation: ", 0) == 0; }));
}

TEST_CASE("CSV output is byte-identical across runs") {
  const auto a = run_simulation(fig2_config());
  const auto b = run_simulation(fig2_config());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(csv_text(a[i]) == csv_text(b[i]));
}

TEST_CASE("SVG layout") {
  const auto trajs = run_simulation(fig1_config());
  const auto svg = render_svg(trajs, "a & b");
  CHECK(svg.find("viewBox=\"0 0 960 600\"") != std::string::npos);
  CHECK(count(svg, "<polyline") == 4);
  CHECK(svg.find("t (fs)") != std::string::npos);
  CHECK(svg.find("℘(GHZ)") != std::string::npos);
  CHECK(svg.find("Ω = 0.1 fs⁻¹") != std::string::npos);
  CHECK(svg.find("Ω = 0.01 fs⁻¹") != std::string::npos);
  CHECK(svg.find("a &amp; b") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);
  // y axis spans [0, 1]: every plotted y lies between the frame's top and bottom.
  const std::regex point(R"((\d+\.\d+),(\d+\.\d+))");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), point); it != std::sregex_iterator(); ++it) {
    const double y = std::stod((*it)[2]);
    CHECK(y >= 50.0);
    CHECK(y <= 530.0);
  }
  CHECK_THROWS(render_svg({}, ""));
}

TEST_CASE("output errors carry the path") {
  SystemParams p;
  p.t_end = 1.0;
  const auto traj = simulate(p, Solver::spectral);
  const std::filesystem::path bad = "/nonexistent-dir/qdghz/out.csv";
  try {
    emit_csv(bad, traj);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
  CHECK_THROWS_AS(emit_svg(bad, std::span<const Trajectory>(&traj, 1)), IoError);
}

TEST_CASE("validation suite") {
  const auto sets = figure_parameter_sets();
  REQUIRE(sets.size() == 8);
  const auto report = validate_suite();
  CHECK(report.pass());
  for (const auto& s : report.sets) CHECK(s.max_deviation < 1e-8);

  ValidationOptions corrupted;
  corrupted.hamiltonian_perturbation = 1e-6;
  CHECK_FALSE(validate_suite(corrupted).pass());
}
