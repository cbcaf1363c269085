#include "ddgeo/harness.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ddgeo {

using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

std::string pulse_mode_name(PulseMode m) {
  return m == PulseMode::Instantaneous ? "instantaneous" : "square";
}
PulseMode pulse_mode_from(const std::string& s) {
  if (s == "instantaneous") return PulseMode::Instantaneous;
  if (s == "square") return PulseMode::Square;
  throw std::invalid_argument("unknown pulse mode: " + s);
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty angle");

  const size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad angle: " + text);
    return v;
  }
  double coef = 1.0;
  const std::string head = s.substr(0, pi_pos);
  if (head == "-") coef = -1.0;
  else if (!head.empty() && head != "+") coef = std::stod(head);
  double den = 1.0;
  const std::string tail = s.substr(pi_pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') throw std::invalid_argument("bad angle: " + text);
    den = std::stod(tail.substr(1));
  }
  return coef * M_PI / den;
}

Vec parse_initial_state(const std::string& name, int dim) {
  const double s2 = 1.0 / std::sqrt(2.0);
  if (dim == 2) {
    Vec v = Vec::Zero(2);
    if (name == "0") v(0) = 1;
    else if (name == "1") v(1) = 1;
    else if (name == "plus-x") { v(0) = s2; v(1) = s2; }
    else if (name == "minus-x") { v(0) = s2; v(1) = -s2; }
    else if (name == "plus-y") { v(0) = s2; v(1) = cplx(0, s2); }
    else if (name == "minus-y") { v(0) = s2; v(1) = cplx(0, -s2); }
    else throw std::invalid_argument("unknown 1q initial state: " + name);
    return v;
  }
  if (dim == 4) {
    Vec v = Vec::Zero(4);
    if (name.size() == 2 && (name[0] == '0' || name[0] == '1') &&
        (name[1] == '0' || name[1] == '1')) {
      v((name[0] - '0') * 2 + (name[1] - '0')) = 1;
    } else if (name == "plus") {
      v(1) = s2; v(2) = cplx(0, s2);
    } else if (name == "minus") {
      v(1) = s2; v(2) = cplx(0, -s2);
    } else {
      throw std::invalid_argument("unknown 2q initial state: " + name);
    }
    return v;
  }
  throw std::invalid_argument("initial states are 1- or 2-qubit only");
}

namespace {

NoiseModel noise_from_json(const json& j) {
  NoiseModel m;
  m.epsilon = j.value("epsilon", 0.0);
  const std::string topo = j.value("topology", "per-qubit");
  if (topo == "per-qubit") m.topology = EnvTopology::PerQubit;
  else if (topo == "shared") m.topology = EnvTopology::Shared;
  else throw std::invalid_argument("unknown topology: " + topo);
  const std::string init = j.value("env_init", "ground");
  if (init == "ground") m.env_init = EnvInit::Ground;
  else if (init == "plus") m.env_init = EnvInit::Plus;
  else if (init == "mixed-average") m.env_init = EnvInit::MixedAverage;
  else throw std::invalid_argument("unknown env_init: " + init);
  if (j.contains("bath")) {
    const std::string type = j["bath"].value("type", "heisenberg");
    if (type != "heisenberg")
      throw std::invalid_argument("only the heisenberg bath is configurable here");
  }
  if (j.contains("env_frequency")) {
    const double we = j["env_frequency"].get<double>();
    m.bath_hamiltonian = we / 2 * pauli(3);
  }
  return m;
}

json noise_to_json(const NoiseModel& m) {
  json j;
  j["epsilon"] = m.epsilon;
  j["topology"] = m.topology == EnvTopology::PerQubit ? "per-qubit" : "shared";
  j["env_init"] = m.env_init == EnvInit::Ground ? "ground"
                  : m.env_init == EnvInit::Plus ? "plus"
                                                : "mixed-average";
  j["bath"] = {{"type", "heisenberg"}};
  return j;
}

double angle_from_json(const json& j) {
  if (j.is_string()) return parse_angle(j.get<std::string>());
  return j.get<double>();
}

}  // namespace

ExperimentConfig parse_experiment(const std::string& json_text) {
  const json j = json::parse(json_text);
  ExperimentConfig cfg;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "one-qubit") cfg.kind = ExperimentKind::OneQubit;
  else if (kind == "two-qubit") cfg.kind = ExperimentKind::TwoQubit;
  else throw std::invalid_argument("unknown experiment kind: " + kind);

  if (j.contains("gate")) {
    const json& g = j["gate"];
    if (g.contains("gamma")) cfg.gamma = angle_from_json(g["gamma"]);
    if (g.contains("J")) cfg.coupling = g["J"].get<double>();
  }
  if (j.contains("frame")) {
    cfg.nx = j["frame"].value("nx", 1);
    cfg.nz = j["frame"].value("nz", 3);
  }
  cfg.sequence.interval_tau = M_PI / (4 * cfg.coupling);
  if (j.contains("sequence")) {
    cfg.sequence.pulse_mode =
        pulse_mode_from(j["sequence"].value("pulse_mode", "instantaneous"));
    cfg.sequence.pulse_strength = j["sequence"].value("pulse_strength", 0.0);
  }
  if (j.contains("noise")) cfg.noise = noise_from_json(j["noise"]);
  if (j.contains("sweep")) {
    cfg.sweep.epsilon_min = j["sweep"].value("epsilon_min", 0.0);
    cfg.sweep.epsilon_max = j["sweep"].value("epsilon_max", 0.2);
    cfg.sweep.points = j["sweep"].value("points", 41);
  }
  if (cfg.sweep.epsilon_min < 0 || cfg.sweep.points < 2 ||
      cfg.sweep.epsilon_max <= cfg.sweep.epsilon_min)
    throw std::invalid_argument("invalid sweep block");
  if (j.contains("sim")) {
    const json& s = j["sim"];
    cfg.sim.steps_per_interval = s.value("steps_per_interval", 4000);
    if (cfg.sim.steps_per_interval < 16)
      throw std::invalid_argument("steps_per_interval must be >= 16");
    const std::string integ = s.value("integrator", "midpoint-2");
    if (integ == "midpoint-2") cfg.sim.integrator = Integrator::Midpoint2;
    else if (integ == "magnus-4") cfg.sim.integrator = Integrator::Magnus4;
    else throw std::invalid_argument("unknown integrator: " + integ);
    cfg.sim.noise_during_pulses = s.value("noise_during_pulses", true);
    cfg.sim.richardson_check = s.value("richardson_check", true);
  }
  cfg.initial = j.value("initial",
                        kind == "one-qubit" ? std::string("plus-x") : std::string("10"));
  if (j.contains("output")) {
    cfg.csv_path = j["output"].value("csv", "");
    cfg.svg_path = j["output"].value("svg", "");
  }
  return cfg;
}

std::string serialize_experiment(const ExperimentConfig& cfg) {
  json j;
  j["kind"] = cfg.kind == ExperimentKind::OneQubit ? "one-qubit" : "two-qubit";
  j["gate"] = {{"gamma", cfg.gamma}};
  if (cfg.kind == ExperimentKind::TwoQubit) {
    j["gate"]["J"] = cfg.coupling;
    j["sequence"] = {{"pulse_mode", pulse_mode_name(cfg.sequence.pulse_mode)},
                     {"pulse_strength", cfg.sequence.pulse_strength}};
  } else {
    j["frame"] = {{"nx", cfg.nx}, {"nz", cfg.nz}};
  }
  j["noise"] = noise_to_json(cfg.noise);
  j["sweep"] = {{"epsilon_min", cfg.sweep.epsilon_min},
                {"epsilon_max", cfg.sweep.epsilon_max},
                {"points", cfg.sweep.points}};
  j["sim"] = {{"steps_per_interval", cfg.sim.steps_per_interval},
              {"integrator", cfg.sim.integrator == Integrator::Midpoint2
                                 ? "midpoint-2"
                                 : "magnus-4"},
              {"noise_during_pulses", cfg.sim.noise_during_pulses},
              {"richardson_check", cfg.sim.richardson_check}};
  j["initial"] = cfg.initial;
  json out;
  if (!cfg.csv_path.empty()) out["csv"] = cfg.csv_path;
  if (!cfg.svg_path.empty()) out["svg"] = cfg.svg_path;
  if (!out.empty()) j["output"] = out;
  return j.dump(2);
}

std::vector<SweepRow> sweep(const ExperimentConfig& cfg) {
  std::vector<SweepRow> rows;
  const SweepSpec& sw = cfg.sweep;

  for (int i = 0; i < sw.points; ++i) {
    const double u =
        sw.epsilon_min + (sw.epsilon_max - sw.epsilon_min) * i / (sw.points - 1);
    SweepRow row;
    row.epsilon = u;
    NoiseModel model = cfg.noise;

    if (cfg.kind == ExperimentKind::OneQubit) {
      const double omega = M_PI;  // tau = 1 internally
      model.epsilon = u * omega;
      const PathSpec path = orange_slice(cfg.gamma, 1.0);
      const Vec init = parse_initial_state(cfg.initial, 2);
      auto prot = run_1q_experiment(path, DecouplingFrame1Q::validated(cfg.nx, cfg.nz, 1.0),
                                    model, init, cfg.sim);
      auto bare = run_1q_experiment(path, DecouplingFrame1Q::bare(1.0), model,
                                    init, cfg.sim);
      row.fidelity_protected = prot.fidelity;
      row.fidelity_unprotected = bare.fidelity;
      row.converged = prot.converged && bare.converged;
    } else {
      model.epsilon = u * cfg.coupling;
      const auto schedule = make_schedule(cfg.gamma, cfg.coupling, cfg.sequence);
      const Vec init = parse_initial_state(cfg.initial, 4);
      auto prot = run_2q_experiment(schedule, model, init, cfg.sim, true);
      auto bare = run_2q_experiment(schedule, model, init, cfg.sim, false);
      row.fidelity_protected = prot.fidelity;
      row.fidelity_unprotected = bare.fidelity;
      row.converged = prot.converged && bare.converged;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_csv(const std::vector<SweepRow>& table) {
  if (table.empty()) throw std::invalid_argument("format_csv: empty table");
  std::string out = "epsilon,fidelity_protected,fidelity_unprotected\n";
  for (const auto& r : table)
    out += fmt(r.epsilon) + "," + fmt(r.fidelity_protected) + "," +
           fmt(r.fidelity_unprotected) + "\n";
  return out;
}

std::vector<SweepRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "epsilon,fidelity_protected,fidelity_unprotected")
    throw std::invalid_argument("parse_csv: bad header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SweepRow r;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &r.epsilon,
                    &r.fidelity_protected, &r.fidelity_unprotected) != 3)
      throw std::invalid_argument("parse_csv: bad row: " + line);
    rows.push_back(r);
  }
  return rows;
}

void emit_csv(const std::vector<SweepRow>& table, const std::string& path) {
  write_file(path, format_csv(table));
}

std::string format_svg(const std::vector<SweepRow>& table) {
  if (table.empty()) throw std::invalid_argument("format_svg: empty table");
  const double w = 640, h = 480, ml = 70, mr = 20, mt = 20, mb = 50;
  const double x0 = table.front().epsilon, x1 = table.back().epsilon;
  double f_lo = 1.0, f_hi = 0.0;
  for (const auto& r : table) {
    f_lo = std::min({f_lo, r.fidelity_protected, r.fidelity_unprotected});
    f_hi = std::max({f_hi, r.fidelity_protected, r.fidelity_unprotected});
  }
  if (f_hi - f_lo < 1e-6) { f_lo -= 0.01; f_hi += 0.01; }
  auto sx = [&](double x) { return ml + (x - x0) / (x1 - x0) * (w - ml - mr); };
  auto sy = [&](double f) { return h - mb - (f - f_lo) / (f_hi - f_lo) * (h - mt - mb); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << w << "\" height=\"" << h << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  svg << "  <line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  svg << "  <text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
      << "\" font-size=\"16\">&#949;</text>\n";
  svg << "  <text x=\"20\" y=\"" << (mt + h - mb) / 2
      << "\" font-size=\"16\">F</text>\n";
  svg << "  <text x=\"" << ml << "\" y=\"" << h - mb + 18 << "\" font-size=\"11\">"
      << fmt(x0) << "</text>\n";
  svg << "  <text x=\"" << w - mr - 30 << "\" y=\"" << h - mb + 18
      << "\" font-size=\"11\">" << fmt(x1) << "</text>\n";
  svg << "  <text x=\"8\" y=\"" << h - mb << "\" font-size=\"11\">" << fmt(f_lo)
      << "</text>\n";
  svg << "  <text x=\"8\" y=\"" << mt + 10 << "\" font-size=\"11\">" << fmt(f_hi)
      << "</text>\n";
  auto series = [&](auto getter, const char* color) {
    svg << "  <polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : table) svg << fmt(sx(r.epsilon)) << "," << fmt(sy(getter(r))) << " ";
    svg << "\"/>\n";
  };
  series([](const SweepRow& r) { return r.fidelity_protected; }, "red");
  series([](const SweepRow& r) { return r.fidelity_unprotected; }, "black");
  svg << "</svg>\n";
  return svg.str();
}

void emit_svg(const std::vector<SweepRow>& table, const std::string& path) {
  write_file(path, format_svg(table));
}

std::string schedule1q_to_json(const PulseSchedule1Q& s, int samples) {
  json j;
  j["tau"] = s.frame.tau;
  j["nx"] = s.frame.nx;
  j["nz"] = s.frame.nz;
  j["gamma"] = geometric_phase(s.path);
  json arr = json::array();
  for (int i = 0; i < samples; ++i) {
    const double t = s.frame.tau * i / (samples - 1);
    auto [ox, oy, oz] = s.omegas(std::min(t, s.frame.tau));
    arr.push_back({{"t", t}, {"ox", ox}, {"oy", oy}, {"oz", oz}});
  }
  j["samples"] = arr;
  return j.dump(2);
}

std::string schedule2q_to_json(const TwoQubitSchedule& s) {
  json j;
  j["gamma"] = s.gamma;
  j["J"] = s.coupling;
  j["tau"] = s.interval_tau;
  j["pulse_mode"] = pulse_mode_name(s.sequence.pulse_mode);
  j["pulse_strength"] = s.sequence.pulse_strength;
  json intervals = json::array();
  for (int k = 0; k < 4; ++k) {
    auto [j1e, j2e] = s.effective_couplings(k);
    auto [j1r, j2r] = s.real_couplings(k);
    intervals.push_back({{"k", k},
                         {"t0", k * s.interval_tau},
                         {"t1", (k + 1) * s.interval_tau},
                         {"j1_eff", j1e},
                         {"j2_eff", j2e},
                         {"j1_real", j1r},
                         {"j2_real", j2r}});
  }
  j["intervals"] = intervals;
  json pulses = json::array();
  std::vector<double> bounds;
  for (int k = 0; k <= 4; ++k) bounds.push_back(k * s.interval_tau);
  for (const auto& e : expand_pulses(s.sequence, bounds))
    pulses.push_back({{"t", e.t}, {"k", e.k}, {"duration", e.duration}});
  j["pulses"] = pulses;
  return j.dump(2);
}

}  // namespace ddgeo
