#include "ddgeo/gate2q.hpp"

#include <cmath>
#include <stdexcept>

namespace ddgeo {

Mat rx_coupling() {
  Mat r = Mat::Zero(4, 4);
  r(1, 2) = 1;
  r(2, 1) = 1;
  return r;
}

Mat ry_coupling() {
  Mat r = Mat::Zero(4, 4);
  r(1, 2) = cplx(0, -1);
  r(2, 1) = cplx(0, 1);
  return r;
}

std::pair<double, double> TwoQubitSchedule::effective_couplings(int k) const {
  if (k < 0 || k > 3) throw std::out_of_range("interval index must be 0..3");
  if (k == 0 || k == 3) return {coupling / 2, 0.0};
  const double a = M_PI - gamma;
  return {coupling * std::cos(a) / 2, coupling * std::sin(a) / 2};
}

std::pair<double, double> TwoQubitSchedule::real_couplings(int k) const {
  auto [j1, j2] = effective_couplings(k);
  // sigma_x/sigma_y sandwiches flip the DM term, identity and sigma_z keep it
  if (k == 1 || k == 2) j2 = -j2;
  return {j1, j2};
}

int TwoQubitSchedule::interval_of(double t) const {
  if (t < -1e-12 || t > 4 * interval_tau + 1e-12)
    throw std::out_of_range("schedule time outside [0, 4 tau]");
  return std::min(3, static_cast<int>(t / interval_tau));
}

namespace {
// J1 (sx sx + sy sy) + J2 (sy sx - sx sy); the DM coefficient is stated
// against R_y = -i|01><10| + i|10><01| = (sy sx - sx sy)/2
Mat coupling_hamiltonian(double j1, double j2) {
  static const Mat xy = kron(pauli(1), pauli(1)) + kron(pauli(2), pauli(2));
  static const Mat dm = kron(pauli(2), pauli(1)) - kron(pauli(1), pauli(2));
  return j1 * xy + j2 * dm;
}
}  // namespace

Mat TwoQubitSchedule::effective_hamiltonian(double t) const {
  auto [j1, j2] = effective_couplings(interval_of(t));
  return coupling_hamiltonian(j1, j2);
}

Mat TwoQubitSchedule::real_hamiltonian(double t) const {
  auto [j1, j2] = real_couplings(interval_of(t));
  return coupling_hamiltonian(j1, j2);
}

TwoQubitSchedule make_schedule(double gamma, double coupling,
                               const DecouplingSequence2Q& seq) {
  if (coupling <= 0) throw std::invalid_argument("make_schedule: J must be positive");
  const double tau = M_PI / (4 * coupling);
  if (std::abs(seq.interval_tau - tau) > 1e-12 * tau)
    throw std::invalid_argument("make_schedule: seq.interval_tau != pi/(4 J)");
  if (seq.pulse_mode == PulseMode::Square && seq.pulse_strength <= 0)
    throw std::invalid_argument("make_schedule: square mode needs pulse_strength > 0");
  return TwoQubitSchedule{gamma, coupling, tau, seq};
}

Mat target_gate_2q(double gamma) {
  Mat u = Mat::Identity(4, 4);
  u(1, 1) = std::cos(gamma);
  u(1, 2) = -std::sin(gamma);
  u(2, 1) = std::sin(gamma);
  u(2, 2) = std::cos(gamma);
  return u;
}

std::vector<PulseEvent> expand_pulses(const DecouplingSequence2Q& seq,
                                      const std::vector<double>& boundaries) {
  if (boundaries.size() != 5)
    throw std::invalid_argument("expand_pulses: need 5 boundaries");
  for (size_t i = 1; i < boundaries.size(); ++i)
    if (boundaries[i] <= boundaries[i - 1])
      throw std::invalid_argument("expand_pulses: boundaries must increase");
  const double dur = seq.pulse_mode == PulseMode::Square
                         ? M_PI / (2 * seq.pulse_strength)
                         : 0.0;
  if (seq.pulse_mode == PulseMode::Square) {
    for (size_t i = 1; i < boundaries.size(); ++i)
      if (2 * dur > boundaries[i] - boundaries[i - 1])
        throw std::invalid_argument("expand_pulses: pulses overlap the interval");
  }
  std::vector<PulseEvent> events;
  for (int k = 1; k < 4; ++k) {
    // opening pulse of interval k, then closing pulse; back-to-back at
    // interior boundaries, never composed
    events.push_back({boundaries[k], k, dur});
    events.push_back({boundaries[k + 1], k, dur});
  }
  return events;
}

std::vector<SchedulePiece> TwoQubitSchedule::program(bool protect) const {
  std::vector<SchedulePiece> out;
  const double tau = interval_tau;

  if (!protect) {
    SchedulePiece p;
    p.type = SchedulePiece::Type::Evolve;
    p.duration = 4 * tau;
    p.hamiltonian = [*this](double t) { return effective_hamiltonian(t); };
    out.push_back(p);
    return out;
  }

  auto sandwich = [&](int k) -> SchedulePiece {
    SchedulePiece p;
    if (sequence.pulse_mode == PulseMode::Instantaneous) {
      p.type = SchedulePiece::Type::Kick;
      p.kick = DecouplingSequence2Q::step_operator(k);
    } else {
      const double omega = sequence.pulse_strength;
      p.type = SchedulePiece::Type::Evolve;
      p.duration = M_PI / (2 * omega);
      p.is_pulse = true;
      const Mat hp = omega * (kron(pauli(k), pauli(0)) + kron(pauli(0), pauli(k)));
      p.hamiltonian = [hp](double) { return hp; };
    }
    return p;
  };

  for (int k = 0; k < 4; ++k) {
    if (k != 0) out.push_back(sandwich(k));
    SchedulePiece ev;
    ev.type = SchedulePiece::Type::Evolve;
    ev.duration = tau;
    const double t0 = k * tau;
    ev.hamiltonian = [*this, t0](double s) { return real_hamiltonian(t0 + s); };
    out.push_back(ev);
    if (k != 0) out.push_back(sandwich(k));
  }
  return out;
}

}  // namespace ddgeo
