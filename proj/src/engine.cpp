#include "ddgeo/engine.hpp"

#include <cmath>
#include <stdexcept>

namespace ddgeo {

namespace {

void check_finite(const Mat& h) {
  if (!h.allFinite())
    throw std::runtime_error("propagate: non-finite Hamiltonian entries");
}

Mat step_midpoint(const HamiltonianFn& h, double t, double dt) {
  const Mat hm = h(t + dt / 2);
  check_finite(hm);
  return expm_hermitian(hm, dt);
}

Mat step_magnus4(const HamiltonianFn& h, double t, double dt) {
  const double node = 0.5 * dt / std::sqrt(3.0);
  const Mat h1 = h(t + dt / 2 - node);
  const Mat h2 = h(t + dt / 2 + node);
  check_finite(h1);
  check_finite(h2);
  // exp(-i K) with K = dt (h1 + h2)/2 - i sqrt(3) dt^2 [h2, h1] / 12
  const Mat comm = h2 * h1 - h1 * h2;
  const Mat k = dt / 2 * (h1 + h2) - cplx(0, std::sqrt(3.0) / 12 * dt * dt) * comm;
  return expm_hermitian(k, 1.0);
}

}  // namespace

Mat propagate(const HamiltonianFn& h, double t0, double t1, int steps,
              Integrator integ) {
  if (t1 <= t0) throw std::invalid_argument("propagate: t1 must exceed t0");
  if (steps < 1) throw std::invalid_argument("propagate: steps must be positive");
  const double dt = (t1 - t0) / steps;
  Mat u = Mat::Identity(h(t0).rows(), h(t0).cols());
  for (int i = 0; i < steps; ++i) {
    const double t = t0 + i * dt;
    u = (integ == Integrator::Midpoint2 ? step_midpoint(h, t, dt)
                                        : step_magnus4(h, t, dt)) *
        u;
  }
  return u;
}

PropagationResult propagate_checked(const HamiltonianFn& h, double t0, double t1,
                                    int steps, Integrator integ) {
  const Mat coarse = propagate(h, t0, t1, steps, integ);
  const Mat fine = propagate(h, t0, t1, 2 * steps, integ);
  return {fine, trace_distance(coarse, fine)};
}

namespace {

struct JointRun {
  Mat unitary;
  double fidelity;
  Mat reduced;
};

// run a piece program on the joint space for one env initial state
JointRun run_program(const std::vector<SchedulePiece>& pieces,
                     const NoiseModel& model, int n_sys, const Vec& initial,
                     const Vec& env0, const Vec& target_state,
                     const SimulationConfig& cfg, int steps) {
  const int n_env = model.env_qubits(n_sys);
  const int env_dim = 1 << n_env;
  const int sys_dim = 1 << n_sys;
  const Mat env_id = Mat::Identity(env_dim, env_dim);

  const Mat coupled = environment_terms(model, n_sys);
  NoiseModel bath_only = model;
  bath_only.epsilon = 0.0;
  bath_only.bath_operators.assign(n_env, {Mat::Zero(2, 2), Mat::Zero(2, 2),
                                          Mat::Zero(2, 2)});
  const Mat decoupled = environment_terms(bath_only, n_sys);

  Mat u = Mat::Identity(sys_dim * env_dim, sys_dim * env_dim);
  for (const auto& piece : pieces) {
    if (piece.type == SchedulePiece::Type::Kick) {
      u = kron(piece.kick, env_id) * u;
      continue;
    }
    const Mat& fixed =
        (piece.is_pulse && !cfg.noise_during_pulses) ? decoupled : coupled;
    auto joint = [&](double t) -> Mat {
      return kron(piece.hamiltonian(t), env_id) + fixed;
    };
    // pulse pieces have constant Hamiltonians; a short step count suffices
    const int piece_steps = piece.is_pulse ? std::max(16, steps / 16) : steps;
    u = propagate(joint, 0, piece.duration, piece_steps, cfg.integrator) * u;
  }

  const Vec joint0 = kron_vec(initial, env0);
  const Vec out = u * joint0;
  Mat rho = out * out.adjoint();
  std::vector<int> dims(n_sys + n_env, 2);
  std::vector<int> keep;
  for (int i = 0; i < n_sys; ++i) keep.push_back(i);
  const Mat reduced = partial_trace(rho, dims, keep);
  return {u, state_fidelity(target_state, reduced), reduced};
}

SimulationOutcome run_experiment(const std::vector<SchedulePiece>& pieces,
                                 const NoiseModel& model, int n_sys,
                                 const Vec& initial, const Vec& target_state,
                                 const SimulationConfig& cfg) {
  if (std::abs(initial.norm() - 1.0) > tol::atol)
    throw std::invalid_argument("run_experiment: initial state not normalized");

  const auto env_states = env_initial_states(model, n_sys);
  auto run_at = [&](int steps) {
    double f = 0;
    Mat reduced;
    Mat last_u;
    for (const auto& [w, env0] : env_states) {
      auto r = run_program(pieces, model, n_sys, initial, env0, target_state,
                           cfg, steps);
      f += w * r.fidelity;
      if (reduced.size() == 0)
        reduced = w * r.reduced;
      else
        reduced += w * r.reduced;
      last_u = r.unitary;
    }
    return std::tuple<double, Mat, Mat>{f, reduced, last_u};
  };

  auto [f, reduced, u] = run_at(cfg.steps_per_interval);
  SimulationOutcome out;
  out.fidelity = f;
  out.reduced_state = reduced;
  out.final_unitary = u;
  if (cfg.richardson_check) {
    auto [f2, reduced2, u2] = run_at(2 * cfg.steps_per_interval);
    out.step_convergence_estimate = std::abs(f2 - f);
    out.converged = out.step_convergence_estimate < kRichardsonGate;
    out.fidelity = f2;
    out.reduced_state = reduced2;
    out.final_unitary = u2;
  }
  return out;
}

}  // namespace

SimulationOutcome run_1q_experiment(const PathSpec& path,
                                    const DecouplingFrame1Q& frame,
                                    const NoiseModel& model, const Vec& initial,
                                    const SimulationConfig& cfg) {
  const PulseSchedule1Q schedule = synthesize(path, frame);
  std::vector<SchedulePiece> pieces(1);
  pieces[0].type = SchedulePiece::Type::Evolve;
  pieces[0].duration = frame.tau;
  pieces[0].hamiltonian = [schedule](double t) {
    return driving_hamiltonian(schedule, t);
  };
  const Vec target_state = holonomy_gate(path) * initial;
  return run_experiment(pieces, model, 1, initial, target_state, cfg);
}

SimulationOutcome run_2q_experiment(const TwoQubitSchedule& schedule,
                                    const NoiseModel& model, const Vec& initial,
                                    const SimulationConfig& cfg, bool protect) {
  const Vec target_state = target_gate_2q(schedule.gamma) * initial;
  return run_experiment(schedule.program(protect), model, 2, initial,
                        target_state, cfg);
}

}  // namespace ddgeo
