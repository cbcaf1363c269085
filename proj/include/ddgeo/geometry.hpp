#pragma once

// Cyclic Bloch-sphere paths, the projective basis, the rotating-frame
// effective Hamiltonian, the geometric phase and the holonomy gate.

#include <functional>
#include <utility>
#include <vector>

#include "ddgeo/matcore.hpp"

namespace ddgeo {

// One scalar parameter (theta or phi) on a segment, as a function of local
// time s in [0, duration].
struct ScalarTrack {
  enum class Kind { Constant, Linear, CosineRamp, Sampled };
  Kind kind = Kind::Constant;
  double a = 0.0;  // value at s = 0
  double b = 0.0;  // total change over the segment
  std::vector<double> samples;  // Sampled: uniform grid over [0, duration]

  static ScalarTrack constant(double value);
  static ScalarTrack linear(double from, double to);
  static ScalarTrack cosine_ramp(double from, double to);
  static ScalarTrack sampled(std::vector<double> values);

  double value(double s, double duration) const;
  double derivative(double s, double duration) const;
};

struct PathSegment {
  double duration = 0.0;
  ScalarTrack theta;
  ScalarTrack phi;
};

struct PathSpec {
  std::vector<PathSegment> segments;

  double tau() const;
  // Throws if the path is not cyclic, theta leaves [0, pi], or a phi jump
  // occurs away from the poles.
  void validate() const;

  // Point evaluation; a boundary instant belongs to the segment starting
  // there (t = tau to the last segment).
  double theta(double t) const;
  double phi(double t) const;
  double theta_dot(double t) const;
  double phi_dot(double t) const;

 private:
  int segment_index(double t, double* local) const;
};

struct GateTarget1Q {
  double theta0 = 0.0;
  double phi0 = 0.0;
  double gamma = 0.0;
};

// Builtin paths -------------------------------------------------------------

// theta: 0 -> pi (phi = 0), then pi -> 0 (phi = offset); geometric phase
// equals offset, gate exp(-i offset sigma_z).
PathSpec orange_slice(double phi_offset, double tau);
// constant-theta circle, phi: 0 -> 2 pi
PathSpec circle_path(double theta0, double tau);
inline PathSpec equatorial_loop(double tau) { return circle_path(M_PI / 2, tau); }
// no motion
PathSpec static_path(double theta0, double phi0, double tau);
// catalog used by property/acceptance sweeps
std::vector<PathSpec> catalog_paths(double tau);

// Operations ----------------------------------------------------------------

std::pair<Vec, Vec> basis_states(const PathSpec& path, double t);

// Traceless Hermitian generator of the projective-basis motion.
Mat effective_hamiltonian_1q(const PathSpec& path, double t);

// gamma = +1/2 (integral of (1 - cos theta) dphi), jump contributions at the
// poles included. Sign fixed by the propagation oracle.
double geometric_phase(const PathSpec& path);

// max_{t, k} |<phi_k(t)| H_eff(t) |phi_k(t)>| over an interior grid.
double parallel_transport_residual(const PathSpec& path, int grid_points);

// exp(-i gamma n.sigma), n = (sin t0 cos p0, sin t0 sin p0, cos t0)
Mat target_gate_1q(const GateTarget1Q& g);

// e^{-i gamma}|phi1(0)><phi1(0)| + e^{+i gamma}|phi2(0)><phi2(0)|
Mat holonomy_gate(const PathSpec& path);

}  // namespace ddgeo
