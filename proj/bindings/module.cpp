#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ddgeo/harness.hpp"

namespace py = pybind11;
using namespace ddgeo;

PYBIND11_MODULE(_core, m) {
  m.doc() = "decoupling-protected geometric gate toolkit";

  // matcore
  m.def("pauli", [](int k) -> Mat { return pauli(k); });
  m.def("kron", &kron);
  m.def("expm_hermitian", &expm_hermitian, py::arg("h"), py::arg("s"));
  m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("dims"),
        py::arg("keep"));
  m.def("state_fidelity", &state_fidelity);
  m.def("trace_fidelity", &trace_fidelity);
  m.def("trace_distance", &trace_distance);

  // control
  py::class_<DecouplingFrame1Q>(m, "DecouplingFrame1Q")
      .def_static("validated", &DecouplingFrame1Q::validated, py::arg("nx"),
                  py::arg("nz"), py::arg("tau"))
      .def_static("bare", &DecouplingFrame1Q::bare, py::arg("tau"))
      .def_readonly("nx", &DecouplingFrame1Q::nx)
      .def_readonly("nz", &DecouplingFrame1Q::nz)
      .def_readonly("tau", &DecouplingFrame1Q::tau);
  m.def("control_unitary_1q", &control_unitary_1q);
  m.def("control_field_1q", &control_field_1q);
  m.def("periodicity_residual", &periodicity_residual, py::arg("frame"),
        py::arg("grid_points") = 201);
  m.def(
      "average_interaction_residual_1q",
      [](const DecouplingFrame1Q& f, int n) {
        const auto r = average_interaction_residual_1q(f, n);
        return std::vector<double>(r.begin(), r.end());
      },
      py::arg("frame"), py::arg("quadrature_points") = 4096);

  // geometry
  py::class_<PathSpec>(m, "PathSpec")
      .def("tau", &PathSpec::tau)
      .def("theta", &PathSpec::theta)
      .def("phi", &PathSpec::phi)
      .def("validate", &PathSpec::validate);
  m.def("orange_slice", &orange_slice, py::arg("phi_offset"), py::arg("tau"));
  m.def("circle_path", &circle_path, py::arg("theta0"), py::arg("tau"));
  m.def("equatorial_loop", &equatorial_loop, py::arg("tau"));
  m.def("geometric_phase", &geometric_phase);
  m.def("parallel_transport_residual", &parallel_transport_residual,
        py::arg("path"), py::arg("grid_points") = 256);
  m.def("holonomy_gate", &holonomy_gate);
  m.def("effective_hamiltonian_1q", &effective_hamiltonian_1q);

  // pulse1q
  py::class_<PulseSchedule1Q>(m, "PulseSchedule1Q")
      .def("omegas",
           [](const PulseSchedule1Q& s, double t) {
             const auto o = s.omegas(t);
             return std::vector<double>(o.begin(), o.end());
           })
      .def("tau", &PulseSchedule1Q::tau);
  m.def("synthesize", &synthesize, py::arg("path"), py::arg("frame"));
  m.def("driving_hamiltonian", &driving_hamiltonian);
  m.def("consistency_residual", &consistency_residual, py::arg("path"),
        py::arg("frame"), py::arg("grid_points") = 256);
  m.def("pulse_envelope", &pulse_envelope, py::arg("schedule"),
        py::arg("grid_points") = 1024);
  m.def(
      "envelope_decomposition",
      [](const PulseSchedule1Q& s, int n) {
        const auto e = envelope_decomposition(s, n);
        return std::vector<double>(e.begin(), e.end());
      },
      py::arg("schedule"), py::arg("grid_points") = 1024);

  // gate2q
  py::enum_<PulseMode>(m, "PulseMode")
      .value("Instantaneous", PulseMode::Instantaneous)
      .value("Square", PulseMode::Square);
  py::class_<DecouplingSequence2Q>(m, "DecouplingSequence2Q")
      .def(py::init<>())
      .def_readwrite("interval_tau", &DecouplingSequence2Q::interval_tau)
      .def_readwrite("pulse_mode", &DecouplingSequence2Q::pulse_mode)
      .def_readwrite("pulse_strength", &DecouplingSequence2Q::pulse_strength)
      .def_static("step_operator", &DecouplingSequence2Q::step_operator);
  py::class_<TwoQubitSchedule>(m, "TwoQubitSchedule")
      .def_readonly("gamma", &TwoQubitSchedule::gamma)
      .def_readonly("coupling", &TwoQubitSchedule::coupling)
      .def_readonly("interval_tau", &TwoQubitSchedule::interval_tau)
      .def("effective_couplings", &TwoQubitSchedule::effective_couplings)
      .def("real_couplings", &TwoQubitSchedule::real_couplings)
      .def("effective_hamiltonian", &TwoQubitSchedule::effective_hamiltonian)
      .def("real_hamiltonian", &TwoQubitSchedule::real_hamiltonian);
  m.def("make_schedule", &make_schedule, py::arg("gamma"), py::arg("coupling"),
        py::arg("sequence"));
  m.def("target_gate_2q", &target_gate_2q);
  m.def("rx_coupling", &rx_coupling);
  m.def("ry_coupling", &ry_coupling);

  // noise
  py::enum_<EnvTopology>(m, "EnvTopology")
      .value("PerQubit", EnvTopology::PerQubit)
      .value("Shared", EnvTopology::Shared);
  py::enum_<EnvInit>(m, "EnvInit")
      .value("Ground", EnvInit::Ground)
      .value("Plus", EnvInit::Plus)
      .value("MixedAverage", EnvInit::MixedAverage);
  py::class_<NoiseModel>(m, "NoiseModel")
      .def(py::init<>())
      .def_readwrite("epsilon", &NoiseModel::epsilon)
      .def_readwrite("topology", &NoiseModel::topology)
      .def_readwrite("env_init", &NoiseModel::env_init);
  m.def("heisenberg_interaction", &heisenberg_interaction);

  // engine
  py::enum_<Integrator>(m, "Integrator")
      .value("Midpoint2", Integrator::Midpoint2)
      .value("Magnus4", Integrator::Magnus4);
  py::class_<SimulationConfig>(m, "SimulationConfig")
      .def(py::init<>())
      .def_readwrite("steps_per_interval", &SimulationConfig::steps_per_interval)
      .def_readwrite("integrator", &SimulationConfig::integrator)
      .def_readwrite("noise_during_pulses", &SimulationConfig::noise_during_pulses)
      .def_readwrite("richardson_check", &SimulationConfig::richardson_check);
  py::class_<SimulationOutcome>(m, "SimulationOutcome")
      .def_readonly("fidelity", &SimulationOutcome::fidelity)
      .def_readonly("reduced_state", &SimulationOutcome::reduced_state)
      .def_readonly("step_convergence_estimate",
                    &SimulationOutcome::step_convergence_estimate)
      .def_readonly("converged", &SimulationOutcome::converged);
  m.def("propagate", &propagate, py::arg("h"), py::arg("t0"), py::arg("t1"),
        py::arg("steps"), py::arg("integrator") = Integrator::Midpoint2);
  m.def("run_1q_experiment", &run_1q_experiment, py::arg("path"),
        py::arg("frame"), py::arg("noise"), py::arg("initial"), py::arg("config"));
  m.def("run_2q_experiment", &run_2q_experiment, py::arg("schedule"),
        py::arg("noise"), py::arg("initial"), py::arg("config"),
        py::arg("protect") = true);

  // harness
  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("epsilon", &SweepRow::epsilon)
      .def_readonly("fidelity_protected", &SweepRow::fidelity_protected)
      .def_readonly("fidelity_unprotected", &SweepRow::fidelity_unprotected)
      .def_readonly("converged", &SweepRow::converged);
  m.def("parse_angle", &parse_angle);
  m.def("parse_initial_state", &parse_initial_state, py::arg("name"),
        py::arg("dim"));
  m.def("sweep_from_json", [](const std::string& text) {
    return sweep(parse_experiment(text));
  });
  m.def("format_csv", &format_csv);
  m.def("format_svg", &format_svg);
}
