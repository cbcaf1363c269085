#pragma once

// Synthesis of the total one-qubit driving field
// H_S(t) = Ox(t) sx + Oy(t) sy + Oz(t) sz from a path and a decoupling
// frame, plus pulse-envelope resource accounting.

#include <array>

#include "ddgeo/control.hpp"
#include "ddgeo/geometry.hpp"
#include "ddgeo/matcore.hpp"

namespace ddgeo {

struct PulseSchedule1Q {
  DecouplingFrame1Q frame;
  PathSpec path;

  // (Ox, Oy, Oz) at time t, angular frequency units
  std::array<double, 3> omegas(double t) const;
  double tau() const { return frame.tau; }
};

// Throws if path.tau() != frame.tau.
PulseSchedule1Q synthesize(const PathSpec& path, const DecouplingFrame1Q& frame);

// Hermitian assembly Ox sx + Oy sy + Oz sz; throws for t outside [0, tau].
Mat driving_hamiltonian(const PulseSchedule1Q& s, double t);

// max_t || H_S(t) - [U_c H_eff U_c^dag + H_c] ||_F -- the synthesis
// self-check.
double consistency_residual(const PathSpec& path, const DecouplingFrame1Q& frame,
                            int grid_points);

// max_t sqrt(Ox^2 + Oy^2 + Oz^2)
double pulse_envelope(const PulseSchedule1Q& s, int grid_points);

// Resource split of the drive into the path-derivative part, the static
// frame part (nx axis plus one unit of the rotating pair) and the remaining
// rotating part with weight nz - 1. For the n_x=1, n_z=3 slice drive the
// three envelopes are (1, sqrt 2, 2) * pi/tau.
std::array<double, 3> envelope_decomposition(const PulseSchedule1Q& s,
                                             int grid_points);

}  // namespace ddgeo
