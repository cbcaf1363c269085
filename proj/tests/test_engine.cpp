#include <doctest.h>

#include "ddgeo/engine.hpp"

using namespace ddgeo;

namespace {
Vec plus_x() {
  Vec v(2);
  v << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  return v;
}
}  // namespace

TEST_CASE("propagate closed forms") {
  const Mat h = sigma_x() + 0.5 * sigma_z();
  auto hf = [&h](double) -> Mat { return h; };
  CHECK((propagate(hf, 0, 2.0, 50) - expm_hermitian(h, 2.0)).norm() < 1e-10);

  auto hy = [](double) -> Mat { return M_PI * sigma_y(); };
  CHECK((propagate(hy, 0, 0.5, 50) - cplx(0, -1) * sigma_y()).norm() < 1e-10);

  CHECK_THROWS_AS(propagate(hf, 1.0, 0.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(propagate(hf, 0, 1.0, 0), std::invalid_argument);
  auto bad = [](double) -> Mat {
    Mat m = Mat::Constant(2, 2, std::nan(""));
    return m;
  };
  CHECK_THROWS_AS(propagate(bad, 0, 1.0, 4), std::runtime_error);
}

TEST_CASE("every propagator is unitary") {
  auto h = [](double t) -> Mat {
    return std::cos(3 * t) * sigma_x() + std::sin(2 * t) * sigma_z();
  };
  for (int steps : {16, 64, 256}) {
    CHECK(is_unitary(propagate(h, 0, 2.0, steps, Integrator::Midpoint2)));
    CHECK(is_unitary(propagate(h, 0, 2.0, steps, Integrator::Magnus4)));
  }
}

TEST_CASE("midpoint error drops ~16x per step quadrupling") {
  auto h = [](double t) -> Mat {
    return std::cos(3 * t) * sigma_x() + std::sin(2 * t) * sigma_z();
  };
  const double e1 = propagate_checked(h, 0, 2.0, 64, Integrator::Midpoint2)
                        .step_convergence_estimate;
  const double e2 = propagate_checked(h, 0, 2.0, 256, Integrator::Midpoint2)
                        .step_convergence_estimate;
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("magnus-4 beats midpoint-2 on an oscillatory drive") {
  auto h = [](double t) -> Mat {
    return std::cos(7 * t) * sigma_x() + std::sin(5 * t) * sigma_y() + sigma_z();
  };
  const double em = propagate_checked(h, 0, 2.0, 128, Integrator::Midpoint2)
                        .step_convergence_estimate;
  const double e4 = propagate_checked(h, 0, 2.0, 128, Integrator::Magnus4)
                        .step_convergence_estimate;
  CHECK(e4 < em / 10);
}

TEST_CASE("noiseless 1q run scores unity") {
  NoiseModel model;  // epsilon = 0
  SimulationConfig cfg;
  cfg.steps_per_interval = 1500;
  const auto out = run_1q_experiment(orange_slice(M_PI / 8, 1.0),
                                     DecouplingFrame1Q::validated(1, 3, 1.0),
                                     model, plus_x(), cfg);
  CHECK(out.fidelity > 1 - 1e-8);
  CHECK(out.fidelity < 1 + 1e-9);
  CHECK(std::abs(out.reduced_state.trace().real() - 1) < 1e-10);
}

TEST_CASE("reference endpoints at eps = 0.2 Omega with the plus env state") {
  NoiseModel model;
  model.epsilon = 0.2 * M_PI;  // Omega = pi / tau, tau = 1
  model.env_init = EnvInit::Plus;
  SimulationConfig cfg;
  cfg.richardson_check = false;
  cfg.steps_per_interval = 3000;
  const Vec init = plus_x();
  const PathSpec path = orange_slice(M_PI / 8, 1.0);

  const auto prot = run_1q_experiment(
      path, DecouplingFrame1Q::validated(1, 3, 1.0), model, init, cfg);
  CHECK(prot.fidelity == doctest::Approx(0.9670).epsilon(2e-3));

  const auto bare =
      run_1q_experiment(path, DecouplingFrame1Q::bare(1.0), model, init, cfg);
  CHECK(bare.fidelity < 0.60);
  CHECK(bare.fidelity == doctest::Approx(0.5979).epsilon(2e-3));
}

TEST_CASE("noiseless 2q run scores unity") {
  DecouplingSequence2Q seq;
  seq.interval_tau = M_PI / 4;
  const auto schedule = make_schedule(M_PI / 4, 1.0, seq);
  NoiseModel model;
  SimulationConfig cfg;
  cfg.steps_per_interval = 500;
  Vec init = Vec::Zero(4);
  init(2) = 1;  // |10>
  const auto out = run_2q_experiment(schedule, model, init, cfg, true);
  CHECK(out.fidelity > 1 - 1e-6);
}

TEST_CASE("2q protection dominates and is continuous at small eps") {
  DecouplingSequence2Q seq;
  seq.interval_tau = M_PI / 4;
  const auto schedule = make_schedule(M_PI / 4, 1.0, seq);
  SimulationConfig cfg;
  cfg.steps_per_interval = 300;
  cfg.richardson_check = false;
  Vec init = Vec::Zero(4);
  init(2) = 1;

  double prev_prot = -1, prev_bare = -1;
  for (double eps : {0.001, 0.01, 0.1, 0.2}) {
    NoiseModel model;
    model.epsilon = eps;
    const auto prot = run_2q_experiment(schedule, model, init, cfg, true);
    const auto bare = run_2q_experiment(schedule, model, init, cfg, false);
    CHECK(prot.fidelity >= bare.fidelity - 1e-9);
    if (eps <= 0.01) {
      CHECK(prot.fidelity > 0.99);
      CHECK(bare.fidelity > 0.9);
    }
    (void)prev_prot;
    (void)prev_bare;
    prev_prot = prot.fidelity;
    prev_bare = bare.fidelity;
  }
}

TEST_CASE("global phase insensitivity of the scored fidelity") {
  // the target enters only through a pure state; multiply it by a phase
  const Vec psi = plus_x();
  const Vec phased = std::exp(cplx(0, 1.234)) * psi;
  const Mat rho = 0.7 * (psi * psi.adjoint()) + 0.3 * identity(2) / 2;
  CHECK(std::abs(state_fidelity(psi, rho) - state_fidelity(phased, rho)) < 1e-12);
}

TEST_CASE("richardson gate flags under-resolved runs") {
  NoiseModel model;
  model.epsilon = 0.2 * M_PI;
  SimulationConfig cfg;
  cfg.steps_per_interval = 64;  // deliberately coarse
  const auto out = run_1q_experiment(orange_slice(M_PI / 8, 1.0),
                                     DecouplingFrame1Q::validated(1, 3, 1.0),
                                     model, plus_x(), cfg);
  CHECK_FALSE(out.converged);
  CHECK(out.step_convergence_estimate > kRichardsonGate);
}

TEST_CASE("first-order decoupling: halving tau cuts infidelity 3x-5x") {
  const double eps = 0.05 * M_PI;  // 0.05 Omega at tau = 1
  SimulationConfig cfg;
  cfg.steps_per_interval = 2000;
  cfg.richardson_check = false;
  auto infidelity = [&](double tau) {
    NoiseModel model;
    model.epsilon = eps;
    const auto out = run_1q_experiment(
        orange_slice(M_PI / 8, tau), DecouplingFrame1Q::validated(1, 3, tau),
        model, plus_x(), cfg);
    return 1 - out.fidelity;
  };
  const double ratio = infidelity(1.0) / infidelity(0.5);
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}
