#include "qdghz/runner/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "qdghz/errors.hpp"

namespace qdghz {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(std::string_view text, std::size_t line) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<double> parse_list(std::string_view text, std::size_t line) {
  std::vector<double> values;
  for (auto part : split(text, ',')) values.push_back(parse_number(part, line));
  return values;
}

bool parse_bool(std::string_view text, std::size_t line) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ParseError(line, "expected true or false, got '" + std::string(text) + "'");
}

}  // namespace

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::omega_rabi: return "omega_rabi";
    case SweepAxis::delta: return "delta";
    case SweepAxis::eta: return "eta";
    case SweepAxis::phi: return "phi";
    case SweepAxis::tau: return "tau";
  }
  return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view name) {
  for (auto axis : {SweepAxis::omega_rabi, SweepAxis::delta, SweepAxis::eta, SweepAxis::phi, SweepAxis::tau})
    if (axis_name(axis) == name) return axis;
  return std::nullopt;
}

void apply_axis(SystemParams& params, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::omega_rabi: params.omega_rabi = value; break;
    case SweepAxis::delta: params.delta = value; break;
    case SweepAxis::eta: params.eta = value; break;
    case SweepAxis::phi: params.phi = value; break;
    case SweepAxis::tau: params.tau = value; break;
  }
}

std::string_view solver_name(Solver solver) { return solver == Solver::spectral ? "spectral" : "oracle"; }

std::vector<SystemParams> RunConfig::members() const {
  if (!sweep) return {params};
  std::vector<SystemParams> out;
  for (double v : sweep->values) {
    SystemParams p = params;
    apply_axis(p, sweep->axis, v);
    out.push_back(p);
  }
  return out;
}

void RunConfig::check() const {
  params.validate();
  integrator.validate();
  if (sweep) {
    if (sweep->values.empty()) throw ValidationError("sweep", "needs at least one value");
    for (double v : sweep->values)
      if (!std::isfinite(v)) throw ValidationError("sweep", "values must be finite");
    try {
      for (const auto& p : members()) p.validate();
    } catch (const ValidationError& e) {
      throw ValidationError("sweep", e.what());
    }
  }
  if (out_prefix.empty()) throw ValidationError("out", "must not be empty");
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::optional<std::string> initial_kind;
  std::optional<std::vector<double>> initial_amplitudes;
  std::set<std::string, std::less<>> seen;

  using Setter = std::function<void(std::string_view, std::size_t)>;
  auto number = [](double& field) -> Setter {
    return [&field](std::string_view v, std::size_t line) { field = parse_number(v, line); };
  };
  auto flag = [](bool& field) -> Setter {
    return [&field](std::string_view v, std::size_t line) { field = parse_bool(v, line); };
  };

  const std::map<std::string, Setter, std::less<>> setters = {
      {"eta", number(cfg.params.eta)},
      {"omega_rabi", number(cfg.params.omega_rabi)},
      {"delta", number(cfg.params.delta)},
      {"phi", number(cfg.params.phi)},
      {"tau", number(cfg.params.tau)},
      {"t_start", number(cfg.params.t_start)},
      {"t_end", number(cfg.params.t_end)},
      {"t_step", number(cfg.params.t_step)},
      {"dt_max", number(cfg.integrator.dt_max)},
      {"error_tol", number(cfg.integrator.error_tol)},
      {"validate", flag(cfg.validate)},
      {"emit_scaled_time", flag(cfg.emit_scaled_time)},
      {"out", [&](std::string_view v, std::size_t) { cfg.out_prefix = std::string(v); }},
      {"initial_state", [&](std::string_view v, std::size_t) { initial_kind = std::string(v); }},
      {"initial_amplitudes",
       [&](std::string_view v, std::size_t line) { initial_amplitudes = parse_list(v, line); }},
      {"solver",
       [&](std::string_view v, std::size_t) {
         if (v == "spectral") {
           cfg.solver = Solver::spectral;
         } else if (v == "oracle") {
           cfg.solver = Solver::oracle;
         } else {
           throw ValidationError("solver", "expected spectral or oracle");
         }
       }},
      {"outputs",
       [&](std::string_view v, std::size_t) {
         cfg.emit_csv = cfg.emit_svg = false;
         for (auto item : split(v, ',')) {
           if (item == "csv") {
             cfg.emit_csv = true;
           } else if (item == "svg") {
             cfg.emit_svg = true;
           } else {
             throw ValidationError("outputs", "unknown output '" + std::string(item) + "'");
           }
         }
       }},
      {"sweep",
       [&](std::string_view v, std::size_t line) {
         const auto colon = v.find(':');
         if (colon == std::string_view::npos) throw ParseError(line, "sweep needs '<axis>: v1, v2, ...'");
         const auto axis = parse_axis(trim(v.substr(0, colon)));
         if (!axis) throw ValidationError("sweep", "unknown axis '" + std::string(trim(v.substr(0, colon))) + "'");
         cfg.sweep = Sweep{*axis, parse_list(trim(v.substr(colon + 1)), line)};
       }},
  };

  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    auto line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");
    const auto it = setters.find(key);
    if (it == setters.end()) throw ValidationError(std::string(key), "unknown key");
    if (!seen.insert(std::string(key)).second) throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
    it->second(value, line_no);
  }

  if (initial_kind) {
    const auto& k = *initial_kind;
    if (k == "vacuum") {
      cfg.params.initial_state = InitialState::vacuum();
    } else if (k == "single") {
      cfg.params.initial_state = InitialState::single();
    } else if (k == "bi") {
      cfg.params.initial_state = InitialState::bi();
    } else if (k == "tri") {
      cfg.params.initial_state = InitialState::tri();
    } else if (k == "custom") {
      if (!initial_amplitudes) throw ValidationError("initial_amplitudes", "required for a custom initial state");
    } else {
      throw ValidationError("initial_state", "expected vacuum, single, bi, tri or custom");
    }
  }
  if (initial_amplitudes) {
    if (initial_kind && *initial_kind != "custom") {
      throw ValidationError("initial_amplitudes", "only valid with initial_state = custom");
    }
    if (initial_amplitudes->size() != 8) {
      throw ValidationError("initial_amplitudes", "expected 8 numbers (re, im for each level)");
    }
    Amplitudes raw;
    for (std::size_t i = 0; i < 4; ++i) raw[i] = Complex((*initial_amplitudes)[2 * i], (*initial_amplitudes)[2 * i + 1]);
    cfg.params.initial_state = InitialState::custom(raw);
  }

  cfg.check();
  return cfg;
}

RunConfig fig1_config() {
  RunConfig cfg;
  cfg.params.eta = 0.1;
  cfg.params.delta = 0.0;
  cfg.params.phi = 0.0;
  cfg.sweep = Sweep{SweepAxis::omega_rabi, {0.1, 0.05, 0.03, 0.01}};
  cfg.out_prefix = "fig1";
  return cfg;
}

RunConfig fig2_config() {
  RunConfig cfg;
  cfg.params.eta = 0.1;
  cfg.params.omega_rabi = 0.05;
  cfg.params.phi = 0.0;
  // 0.1, 0.3, 1.0 and 3.0 times eta
  cfg.sweep = Sweep{SweepAxis::delta, {0.01, 0.03, 0.1, 0.3}};
  cfg.out_prefix = "fig2";
  return cfg;
}

}  // namespace qdghz
