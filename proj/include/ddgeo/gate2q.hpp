#pragma once

// Piecewise two-qubit geometric gate schedule: XY + Dzialoshinski-Moriya
// couplings over four intervals, sandwiched by the periodic decoupling
// sequence {sigma_k (x) sigma_k}.

#include <functional>
#include <vector>

#include "ddgeo/control.hpp"
#include "ddgeo/matcore.hpp"

namespace ddgeo {

// R_x = |01><10| + |10><01|, R_y = -i|01><10| + i|10><01|
Mat rx_coupling();
Mat ry_coupling();

struct PulseEvent {
  double t = 0.0;      // coupling-timeline instant
  int k = 0;           // Pauli index of the sigma_k (x) sigma_k operator
  double duration = 0.0;  // 0 in instantaneous mode
};

// One piece of an executable program on the two-qubit system space.
struct SchedulePiece {
  enum class Type { Evolve, Kick };
  Type type = Type::Evolve;
  double duration = 0.0;                    // Evolve only
  std::function<Mat(double)> hamiltonian;   // Evolve: local time -> 4x4
  Mat kick;                                 // Kick: 4x4 unitary
  bool is_pulse = false;                    // square decoupling pulse piece
};

struct TwoQubitSchedule {
  double gamma = 0.0;
  double coupling = 1.0;  // J
  double interval_tau = 1.0;
  DecouplingSequence2Q sequence;

  // effective couplings (J1, J2) in interval k (0..3)
  std::pair<double, double> effective_couplings(int k) const;
  // lab couplings after conjugation with sigma_k (x) sigma_k
  std::pair<double, double> real_couplings(int k) const;

  // desired effective Hamiltonian at coupling time t in [0, 4 tau]
  Mat effective_hamiltonian(double t) const;
  // driven lab Hamiltonian at coupling time t
  Mat real_hamiltonian(double t) const;

  int interval_of(double t) const;

  // executable program: protected (with the sandwich, per sequence.pulse_mode)
  // or the contiguous bare reference realizing the same gate
  std::vector<SchedulePiece> program(bool protect) const;
};

// Throws unless seq.interval_tau == pi / (4 J).
TwoQubitSchedule make_schedule(double gamma, double coupling,
                               const DecouplingSequence2Q& seq);

// identity on |00>, |11>; rotation by gamma on the {|01>, |10>} block
Mat target_gate_2q(double gamma);

// Timed sandwich events for the 5 interval boundaries; k = 0 events are
// identity and elided. Square mode assigns each event duration pi/(2 Op).
std::vector<PulseEvent> expand_pulses(const DecouplingSequence2Q& seq,
                                      const std::vector<double>& boundaries);

}  // namespace ddgeo
