#pragma once

// Experiment configuration, noise sweeps and CSV/SVG emission.

#include <optional>
#include <string>
#include <vector>

#include "ddgeo/engine.hpp"

namespace ddgeo {

enum class ExperimentKind { OneQubit, TwoQubit };

struct SweepSpec {
  double epsilon_min = 0.0;  // units of Omega (1q) or J (2q)
  double epsilon_max = 0.2;
  int points = 41;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::OneQubit;
  // one-qubit gate: orange-slice path with this phase, frame (nx, nz)
  double gamma = M_PI / 8;
  int nx = 1;
  int nz = 3;
  // two-qubit gate
  double coupling = 1.0;  // J
  DecouplingSequence2Q sequence;
  NoiseModel noise;  // epsilon ignored during sweeps
  SweepSpec sweep;
  SimulationConfig sim;
  std::string initial = "plus-x";
  std::string csv_path;
  std::string svg_path;
};

struct SweepRow {
  double epsilon = 0.0;  // in sweep units
  double fidelity_protected = 0.0;
  double fidelity_unprotected = 0.0;
  bool converged = true;
};

// JSON round-trip of the experiment schema (schemas/experiment.schema.json).
ExperimentConfig parse_experiment(const std::string& json_text);
std::string serialize_experiment(const ExperimentConfig& cfg);

// "pi/8", "2pi/3", "-pi/4", plain numbers
double parse_angle(const std::string& text);

// named initial states; dim 2 or 4
Vec parse_initial_state(const std::string& name, int dim);

std::vector<SweepRow> sweep(const ExperimentConfig& cfg);

// CSV with header epsilon,fidelity_protected,fidelity_unprotected
std::string format_csv(const std::vector<SweepRow>& table);
std::vector<SweepRow> parse_csv(const std::string& text);
void emit_csv(const std::vector<SweepRow>& table, const std::string& path);

// SVG 1.1 line chart with both series
std::string format_svg(const std::vector<SweepRow>& table);
void emit_svg(const std::vector<SweepRow>& table, const std::string& path);

// pulse schedule export (schemas/schedule1q.schema.json)
std::string schedule1q_to_json(const PulseSchedule1Q& s, int samples);
std::string schedule2q_to_json(const TwoQubitSchedule& s);

// CLI entry point used by tools/ddgeo.cpp; exit codes: 0 ok, 2 usage,
// 3 numerical non-convergence
int cli_main(int argc, char** argv);

}  // namespace ddgeo
