#include "ddgeo/matcore.hpp"

#include <stdexcept>

namespace ddgeo {

const Mat& pauli(int k) {
  static const std::array<Mat, 4> table = [] {
    std::array<Mat, 4> t;
    for (auto& m : t) m = Mat::Zero(2, 2);
    t[0] << 1, 0, 0, 1;
    t[1] << 0, 1, 1, 0;
    t[2] << 0, cplx(0, -1), cplx(0, 1), 0;
    t[3] << 1, 0, 0, -1;
    return t;
  }();
  if (k < 0 || k > 3) throw std::out_of_range("pauli index must be 0..3");
  return table[k];
}

Mat identity(int dim) { return Mat::Identity(dim, dim); }

bool is_hermitian(const Mat& m, double eps) {
  return (m - m.adjoint()).norm() < eps;
}

bool is_unitary(const Mat& m, double eps) {
  return (m.adjoint() * m - identity(m.rows())).norm() < eps;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (int i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Mat expm_hermitian(const Mat& h, double s) {
  if (!is_hermitian(h))
    throw std::invalid_argument("expm_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const auto& w = es.eigenvalues();
  const Mat& v = es.eigenvectors();
  Vec phases(w.size());
  for (int i = 0; i < w.size(); ++i)
    phases(i) = std::exp(cplx(0, -s * w(i)));
  return v * phases.asDiagonal() * v.adjoint();
}

Mat partial_trace(const Mat& rho, const std::vector<int>& dims,
                  const std::vector<int>& keep) {
  int total = 1;
  for (int d : dims) total *= d;
  if (total != rho.rows() || rho.rows() != rho.cols())
    throw std::invalid_argument("partial_trace: dimension mismatch");

  int keep_dim = 1;
  for (int k : keep) keep_dim *= dims[k];
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) kept[k] = true;

  const int n = static_cast<int>(dims.size());
  // strides of each subsystem index in the flat row index
  std::vector<int> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  Mat out = Mat::Zero(keep_dim, keep_dim);
  std::vector<int> idx_r(n, 0), idx_c(n, 0);
  for (int r = 0; r < total; ++r) {
    for (int i = 0; i < n; ++i) idx_r[i] = (r / stride[i]) % dims[i];
    for (int c = 0; c < total; ++c) {
      for (int i = 0; i < n; ++i) idx_c[i] = (c / stride[i]) % dims[i];
      bool diagonal_on_traced = true;
      for (int i = 0; i < n; ++i)
        if (!kept[i] && idx_r[i] != idx_c[i]) { diagonal_on_traced = false; break; }
      if (!diagonal_on_traced) continue;
      int kr = 0, kc = 0;
      for (int k : keep) { kr = kr * dims[k] + idx_r[k]; kc = kc * dims[k] + idx_c[k]; }
      out(kr, kc) += rho(r, c);
    }
  }
  return out;
}

double state_fidelity(const Vec& psi, const Mat& rho) {
  if (std::abs(psi.norm() - 1.0) > tol::atol)
    throw std::invalid_argument("state_fidelity: psi is not normalized");
  if (psi.size() != rho.rows())
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  cplx f = (psi.adjoint() * rho * psi)(0, 0);
  if (std::abs(f.imag()) > tol::atol)
    throw std::runtime_error("state_fidelity: quadratic form is not real");
  return f.real();
}

double trace_fidelity(const Mat& u, const Mat& v) {
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

double trace_distance(const Mat& a, const Mat& b) {
  Mat d = a - b;
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(d.adjoint() * d));
  double sum = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    sum += std::sqrt(std::max(0.0, es.eigenvalues()(i)));
  return 0.5 * sum;
}

}  // namespace ddgeo
