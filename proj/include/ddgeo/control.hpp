#pragma once

// Decoupling frames and numerical verification of the two decoupling
// conditions: (a) periodicity of the control unitary over the gate time and
// (b) vanishing time average of the toggled system-environment coupling.

#include <array>
#include <functional>
#include <vector>

#include "ddgeo/matcore.hpp"

namespace ddgeo {

struct DecouplingFrame1Q {
  int nx = 0;
  int nz = 0;
  double tau = 1.0;

  // Validating factory: nx, nz positive, equal parity, nx != nz.
  static DecouplingFrame1Q validated(int nx, int nz, double tau);
  // Bypasses the invariants. Test/reference use only (e.g. the bare frame).
  static DecouplingFrame1Q unchecked(int nx, int nz, double tau);
  // The no-protection frame nx = nz = 0.
  static DecouplingFrame1Q bare(double tau) { return unchecked(0, 0, tau); }

  bool is_bare() const { return nx == 0 && nz == 0; }
};

enum class PulseMode { Instantaneous, Square };

struct DecouplingSequence2Q {
  double interval_tau = 1.0;
  PulseMode pulse_mode = PulseMode::Instantaneous;
  double pulse_strength = 0.0;  // angular frequency, square mode only

  // The four step operators sigma_k (x) sigma_k, k = 0..3 (I, x, y, z).
  static Mat step_operator(int k);
  static constexpr int step_count = 4;
};

// U_c(t) = exp(-i pi nx sx t/tau) exp(-i pi nz sz t/tau)
Mat control_unitary_1q(const DecouplingFrame1Q& frame, double t);

// H_c(t) = i dU_c/dt U_c^dag, in closed form.
Mat control_field_1q(const DecouplingFrame1Q& frame, double t);

// U_c^dag(t) sigma_axis U_c(t); axis in {1,2,3} for x, y, z.
Mat toggled_pauli_1q(const DecouplingFrame1Q& frame, int axis, double t);

// Condition (a): max_t ||U_c(t+tau) - U_c(t)||_F over a grid.
double periodicity_residual(const DecouplingFrame1Q& frame, int grid_points);

// Condition (b): || int_0^tau U_c^dag sigma_mu U_c dt ||_F for mu = x, y, z.
// quadrature_points = total Gauss-Legendre nodes (2 per panel).
std::array<double, 3> average_interaction_residual_1q(
    const DecouplingFrame1Q& frame, int quadrature_points);

// || sum_k (sigma_k (x) sigma_k) H (sigma_k (x) sigma_k) ||_F summed over the
// supplied 4x4 Hermitian terms, computed in the Pauli basis so single-qubit
// terms cancel exactly (coefficient times an integer sign sum).
double sequence_average_residual_2q(const DecouplingSequence2Q& seq,
                                    const std::vector<Mat>& interaction_terms);

// Composite 2-point Gauss-Legendre over [a, b]; npoints total nodes.
double gauss_legendre2(const std::function<double(double)>& f, double a,
                       double b, int npoints);

}  // namespace ddgeo
