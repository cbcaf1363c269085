#include "ddgeo/noise.hpp"

#include <stdexcept>

namespace ddgeo {

Mat heisenberg_interaction(double epsilon) {
  if (epsilon < 0) throw std::invalid_argument("heisenberg_interaction: epsilon < 0");
  Mat h = Mat::Zero(4, 4);
  for (int m = 1; m <= 3; ++m) h += epsilon * kron(pauli(m), pauli(m));
  return h;
}

namespace {

// single-qubit operator embedded at position q of an n-qubit register
Mat embed_1q(const Mat& op, int q, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, i == q ? op : pauli(0));
  return out;
}

}  // namespace

Mat environment_terms(const NoiseModel& model, int n_sys) {
  const int n_env = model.env_qubits(n_sys);
  const int n = n_sys + n_env;
  const int dim = 1 << n;
  Mat h = Mat::Zero(dim, dim);

  // bath self-Hamiltonian, per environment qubit
  if (model.bath_hamiltonian.size() > 0) {
    if (model.bath_hamiltonian.rows() != 2)
      throw std::invalid_argument("environment_terms: bath_hamiltonian must be 2x2");
    for (int e = 0; e < n_env; ++e)
      h += embed_1q(model.bath_hamiltonian, n_sys + e, n);
  }

  // interaction terms
  auto bath_op = [&](int e, int mu) -> Mat {
    if (!model.bath_operators.empty()) {
      const Mat& b = model.bath_operators.at(e)[mu - 1];
      if (!is_hermitian(b))
        throw std::invalid_argument("environment_terms: bath operator not Hermitian");
      return b;
    }
    return model.epsilon * pauli(mu);
  };
  for (int q = 0; q < n_sys; ++q) {
    const int e = model.topology == EnvTopology::PerQubit ? q : 0;
    for (int mu = 1; mu <= 3; ++mu)
      h += embed_1q(pauli(mu), q, n) * embed_1q(bath_op(e, mu), n_sys + e, n);
  }
  return h;
}

HamiltonianFn assemble_total(const HamiltonianFn& system_h,
                             const NoiseModel& model, int n_sys) {
  const int n_env = model.env_qubits(n_sys);
  const int env_dim = 1 << n_env;
  const Mat fixed = environment_terms(model, n_sys);
  const Mat env_id = Mat::Identity(env_dim, env_dim);
  const int sys_dim = 1 << n_sys;
  return [system_h, fixed, env_id, sys_dim](double t) {
    const Mat hs = system_h(t);
    if (hs.rows() != sys_dim)
      throw std::invalid_argument("assemble_total: system dimension mismatch");
    return Mat(kron(hs, env_id) + fixed);
  };
}

std::vector<std::pair<double, Vec>> env_initial_states(const NoiseModel& model,
                                                       int n_sys) {
  const int n_env = model.env_qubits(n_sys);
  const int dim = 1 << n_env;
  std::vector<std::pair<double, Vec>> out;
  switch (model.env_init) {
    case EnvInit::Ground: {
      Vec v = Vec::Zero(dim);
      v(0) = 1;
      out.emplace_back(1.0, v);
      break;
    }
    case EnvInit::Plus: {
      Vec v = Vec::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
      out.emplace_back(1.0, v);
      break;
    }
    case EnvInit::MixedAverage: {
      for (int i = 0; i < dim; ++i) {
        Vec v = Vec::Zero(dim);
        v(i) = 1;
        out.emplace_back(1.0 / dim, v);
      }
      break;
    }
  }
  return out;
}

}  // namespace ddgeo
