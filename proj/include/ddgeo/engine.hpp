#pragma once

// Time-ordered propagation of time-dependent Hamiltonians and end-to-end
// experiment execution producing fidelities.

#include "ddgeo/gate2q.hpp"
#include "ddgeo/geometry.hpp"
#include "ddgeo/noise.hpp"
#include "ddgeo/pulse1q.hpp"

namespace ddgeo {

enum class Integrator { Midpoint2, Magnus4 };

struct SimulationConfig {
  int steps_per_interval = 4000;
  Integrator integrator = Integrator::Midpoint2;
  bool noise_during_pulses = true;  // square pulse mode only
  bool richardson_check = true;
};

struct SimulationOutcome {
  Mat final_unitary;   // joint-space unitary (finest run)
  Mat reduced_state;   // system density matrix, env-weighted
  double fidelity = 0.0;
  double step_convergence_estimate = 0.0;
  bool converged = true;
};

constexpr double kRichardsonGate = 1e-7;

// Product of per-step exponentials; midpoint-2 or 4th-order Magnus with two
// Gauss nodes per step.
Mat propagate(const HamiltonianFn& h, double t0, double t1, int steps,
              Integrator integ = Integrator::Midpoint2);

struct PropagationResult {
  Mat unitary;
  double step_convergence_estimate;  // trace distance to the 2x-steps run
};
PropagationResult propagate_checked(const HamiltonianFn& h, double t0, double t1,
                                    int steps, Integrator integ);

// Propagate over [0, tau] with the synthesized drive (bare frame for the
// unprotected reference), trace out the environment and score against the
// holonomy target.
SimulationOutcome run_1q_experiment(const PathSpec& path,
                                    const DecouplingFrame1Q& frame,
                                    const NoiseModel& model, const Vec& initial,
                                    const SimulationConfig& cfg);

// protect = false runs the contiguous bare reference realizing the same gate.
SimulationOutcome run_2q_experiment(const TwoQubitSchedule& schedule,
                                    const NoiseModel& model, const Vec& initial,
                                    const SimulationConfig& cfg,
                                    bool protect = true);

}  // namespace ddgeo
