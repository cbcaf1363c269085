#include "ddgeo/control.hpp"

#include <cmath>
#include <stdexcept>

namespace ddgeo {

DecouplingFrame1Q DecouplingFrame1Q::validated(int nx, int nz, double tau) {
  if (nx <= 0 || nz <= 0)
    throw std::invalid_argument("frame: nx and nz must be positive");
  if (nx == nz) throw std::invalid_argument("frame: nx must differ from nz");
  if ((nx - nz) % 2 != 0)
    throw std::invalid_argument("frame: nx and nz must have equal parity");
  if (tau <= 0) throw std::invalid_argument("frame: tau must be positive");
  return DecouplingFrame1Q{nx, nz, tau};
}

DecouplingFrame1Q DecouplingFrame1Q::unchecked(int nx, int nz, double tau) {
  return DecouplingFrame1Q{nx, nz, tau};
}

Mat DecouplingSequence2Q::step_operator(int k) {
  return kron(pauli(k), pauli(k));
}

Mat control_unitary_1q(const DecouplingFrame1Q& f, double t) {
  const double ax = M_PI * f.nx * t / f.tau;
  const double az = M_PI * f.nz * t / f.tau;
  return expm_hermitian(sigma_x(), ax) * expm_hermitian(sigma_z(), az);
}

Mat control_field_1q(const DecouplingFrame1Q& f, double t) {
  const double wx = M_PI * f.nx / f.tau;
  const double wz = M_PI * f.nz / f.tau;
  const double a = 2.0 * M_PI * f.nx * t / f.tau;
  return wx * sigma_x() + wz * (std::cos(a) * sigma_z() - std::sin(a) * sigma_y());
}

Mat toggled_pauli_1q(const DecouplingFrame1Q& f, int axis, double t) {
  if (axis < 1 || axis > 3)
    throw std::out_of_range("toggled_pauli_1q: axis must be 1..3");
  const double cx = std::cos(2 * M_PI * f.nx * t / f.tau);
  const double sx_ = std::sin(2 * M_PI * f.nx * t / f.tau);
  const double cz = std::cos(2 * M_PI * f.nz * t / f.tau);
  const double sz_ = std::sin(2 * M_PI * f.nz * t / f.tau);
  switch (axis) {
    case 1:
      return cz * sigma_x() - sz_ * sigma_y();
    case 2:
      return cx * sz_ * sigma_x() + cx * cz * sigma_y() - sx_ * sigma_z();
    default:
      return sx_ * sz_ * sigma_x() + sx_ * cz * sigma_y() + cx * sigma_z();
  }
}

double periodicity_residual(const DecouplingFrame1Q& f, int grid_points) {
  if (grid_points < 2)
    throw std::invalid_argument("periodicity_residual: grid_points >= 2");
  double worst = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = f.tau * i / (grid_points - 1);
    worst = std::max(
        worst, (control_unitary_1q(f, t + f.tau) - control_unitary_1q(f, t)).norm());
  }
  return worst;
}

double gauss_legendre2(const std::function<double(double)>& f, double a,
                       double b, int npoints) {
  const int panels = std::max(1, npoints / 2);
  const double h = (b - a) / panels;
  const double node = 0.5 / std::sqrt(3.0);
  double sum = 0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    sum += f(mid - node * h) + f(mid + node * h);
  }
  return sum * h / 2;
}

std::array<double, 3> average_interaction_residual_1q(
    const DecouplingFrame1Q& f, int quadrature_points) {
  std::array<double, 3> out{};
  for (int axis = 1; axis <= 3; ++axis) {
    // integrate the toggled Pauli entrywise with the same node set
    Mat acc = Mat::Zero(2, 2);
    const int panels = std::max(1, quadrature_points / 2);
    const double h = f.tau / panels;
    const double node = 0.5 / std::sqrt(3.0);
    for (int p = 0; p < panels; ++p) {
      const double mid = (p + 0.5) * h;
      acc += toggled_pauli_1q(f, axis, mid - node * h);
      acc += toggled_pauli_1q(f, axis, mid + node * h);
    }
    out[axis - 1] = (acc * h / 2).norm();
  }
  return out;
}

namespace {

// sign of sigma_k sigma_a sigma_k: +1 if either is identity or they match.
int conj_sign(int k, int a) {
  if (k == 0 || a == 0 || k == a) return 1;
  return -1;
}

// coefficients of h in the two-qubit Pauli basis, c_{ab} = tr(P_ab h)/4
std::array<std::array<cplx, 4>, 4> pauli_coeffs(const Mat& h) {
  std::array<std::array<cplx, 4>, 4> c{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      c[a][b] = (kron(pauli(a), pauli(b)) * h).trace() / 4.0;
  return c;
}

}  // namespace

double sequence_average_residual_2q(const DecouplingSequence2Q&,
                                    const std::vector<Mat>& interaction_terms) {
  double total = 0;
  for (const Mat& h : interaction_terms) {
    if (h.rows() != 4 || h.cols() != 4)
      throw std::invalid_argument("sequence_average_residual_2q: terms must be 4x4");
    auto c = pauli_coeffs(h);
    double norm2 = 0;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        int sign_sum = 0;
        for (int k = 0; k < 4; ++k) sign_sum += conj_sign(k, a) * conj_sign(k, b);
        // ||P_ab||_F^2 = 4; coefficients are exact +-1 sums, so single-qubit
        // terms come out bitwise zero
        norm2 += 4.0 * std::norm(c[a][b] * static_cast<double>(sign_sum));
      }
    }
    total += std::sqrt(norm2);
  }
  return total;
}

}  // namespace ddgeo
