#pragma once

// System-environment interaction models and joint-space Hamiltonian assembly.
// Qubit ordering: system qubits first, then their paired environment qubits
// in the same order.

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "ddgeo/matcore.hpp"

namespace ddgeo {

enum class EnvTopology { PerQubit, Shared };
enum class EnvInit { Ground, Plus, MixedAverage };

struct NoiseModel {
  double epsilon = 0.0;  // coupling strength, angular frequency
  EnvTopology topology = EnvTopology::PerQubit;
  EnvInit env_init = EnvInit::Ground;
  Mat bath_hamiltonian;  // per environment qubit; empty means zero
  // optional custom bath operators (B_x, B_y, B_z) per environment qubit;
  // empty means the Heisenberg default B_mu = epsilon sigma_mu
  std::vector<std::array<Mat, 3>> bath_operators;

  int env_qubits(int n_system_qubits) const {
    return topology == EnvTopology::PerQubit ? n_system_qubits : 1;
  }
};

// epsilon (sx sx + sy sy + sz sz) on one system (x) env pair
Mat heisenberg_interaction(double epsilon);

using HamiltonianFn = std::function<Mat(double)>;

// H_sys(t) (x) I_env + I_sys (x) H_E + interaction embeddings.
HamiltonianFn assemble_total(const HamiltonianFn& system_h,
                             const NoiseModel& model, int n_system_qubits);

// the static part (bath + interaction) alone, on the joint space
Mat environment_terms(const NoiseModel& model, int n_system_qubits);

// initial environment states with weights (MixedAverage enumerates the
// computational basis)
std::vector<std::pair<double, Vec>> env_initial_states(const NoiseModel& model,
                                                       int n_system_qubits);

}  // namespace ddgeo
