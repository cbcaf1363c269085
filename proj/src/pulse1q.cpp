#include "ddgeo/pulse1q.hpp"

#include <cmath>
#include <stdexcept>

namespace ddgeo {

std::array<double, 3> PulseSchedule1Q::omegas(double t) const {
  const double tau = frame.tau;
  const double th = path.theta(t), ph = path.phi(t);
  const double thd = path.theta_dot(t), phd = path.phi_dot(t);
  const double wx = 2 * M_PI * frame.nx * t / tau;
  const double az = ph + 2 * M_PI * frame.nz * t / tau;

  const double ox = -thd / 2 * std::sin(az) -
                    phd / 4 * std::sin(2 * th) * std::cos(az) +
                    M_PI * frame.nx / tau;
  const double oy = thd / 2 * std::cos(wx) * std::cos(az) -
                    phd / 4 * (std::sin(2 * th) * std::cos(wx) * std::sin(az) +
                               (1 - std::cos(2 * th)) * std::sin(wx)) -
                    M_PI * frame.nz * std::sin(wx) / tau;
  const double oz = thd / 2 * std::sin(wx) * std::cos(az) -
                    phd / 4 * (std::sin(2 * th) * std::sin(wx) * std::sin(az) -
                               (1 - std::cos(2 * th)) * std::cos(wx)) +
                    M_PI * frame.nz * std::cos(wx) / tau;
  return {ox, oy, oz};
}

PulseSchedule1Q synthesize(const PathSpec& path, const DecouplingFrame1Q& frame) {
  path.validate();
  if (std::abs(path.tau() - frame.tau) > 1e-12 * std::max(1.0, frame.tau))
    throw std::invalid_argument("synthesize: path duration != frame tau");
  return PulseSchedule1Q{frame, path};
}

Mat driving_hamiltonian(const PulseSchedule1Q& s, double t) {
  if (t < -1e-12 || t > s.tau() + 1e-12)
    throw std::out_of_range("driving_hamiltonian: t outside [0, tau]");
  auto [ox, oy, oz] = s.omegas(t);
  return ox * sigma_x() + oy * sigma_y() + oz * sigma_z();
}

double consistency_residual(const PathSpec& path, const DecouplingFrame1Q& frame,
                            int grid_points) {
  PulseSchedule1Q s{frame, path};
  double worst = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = frame.tau * (i + 0.5) / grid_points;
    const Mat uc = control_unitary_1q(frame, t);
    const Mat expected = uc * effective_hamiltonian_1q(path, t) * uc.adjoint() +
                         control_field_1q(frame, t);
    worst = std::max(worst, (driving_hamiltonian(s, t) - expected).norm());
  }
  return worst;
}

double pulse_envelope(const PulseSchedule1Q& s, int grid_points) {
  double worst = 0;
  for (int i = 0; i < grid_points; ++i) {
    auto [ox, oy, oz] = s.omegas(s.tau() * (i + 0.5) / grid_points);
    worst = std::max(worst, std::sqrt(ox * ox + oy * oy + oz * oz));
  }
  return worst;
}

std::array<double, 3> envelope_decomposition(const PulseSchedule1Q& s,
                                             int grid_points) {
  const double tau = s.tau();
  if (s.frame.is_bare()) return {pulse_envelope(s, grid_points), 0.0, 0.0};

  double geo = 0, stat = 0, rot = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = tau * (i + 0.5) / grid_points;
    auto [ox, oy, oz] = s.omegas(t);
    const double wx = 2 * M_PI * s.frame.nx * t / tau;
    // frame field: nx pi/tau on sx plus the rotating nz pair
    const double fx = M_PI * s.frame.nx / tau;
    const double fy = -M_PI * s.frame.nz * std::sin(wx) / tau;
    const double fz = M_PI * s.frame.nz * std::cos(wx) / tau;
    geo = std::max(geo, std::hypot(ox - fx, oy - fy, oz - fz));
    // one unit of the rotating pair stays with the static axis term
    const double uy = -M_PI * std::sin(wx) / tau;
    const double uz = M_PI * std::cos(wx) / tau;
    stat = std::max(stat, std::hypot(fx, uy, uz));
    rot = std::max(rot, std::hypot(0.0, fy - uy, fz - uz));
  }
  return {geo, stat, rot};
}

}  // namespace ddgeo
