#pragma once

// Dense complex-matrix kernel for small Hilbert spaces (dim <= 16).
// Everything is value-semantic and pure; Eigen does the heavy lifting.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ddgeo {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

namespace tol {
constexpr double atol = 1e-10;
constexpr double unitary = 1e-10;
constexpr double hermitian = 1e-12;
constexpr double quadrature = 1e-10;
constexpr double trace_one = 1e-10;
}  // namespace tol

// Pauli operators indexed 0..3 as I, sigma_x, sigma_y, sigma_z.
const Mat& pauli(int k);
inline const Mat& sigma_x() { return pauli(1); }
inline const Mat& sigma_y() { return pauli(2); }
inline const Mat& sigma_z() { return pauli(3); }
Mat identity(int dim);

bool is_hermitian(const Mat& m, double eps = tol::hermitian);
bool is_unitary(const Mat& m, double eps = tol::unitary);

// Tensor product, a-indices major.
Mat kron(const Mat& a, const Mat& b);
Vec kron_vec(const Vec& a, const Vec& b);

// exp(-i*s*h) for Hermitian h, via eigendecomposition. Throws on
// non-Hermitian input.
Mat expm_hermitian(const Mat& h, double s);

// Reduced density matrix on the kept subsystems. dims are the subsystem
// dimensions in tensor order; keep lists the indices to retain.
Mat partial_trace(const Mat& rho, const std::vector<int>& dims,
                  const std::vector<int>& keep);

// F = <psi|rho|psi>. psi must be normalized; the imaginary part of the
// quadratic form is asserted small.
double state_fidelity(const Vec& psi, const Mat& rho);

// |tr(U^dag V)| / dim -- global-phase-insensitive gate comparison.
double trace_fidelity(const Mat& u, const Mat& v);

double trace_distance(const Mat& a, const Mat& b);

}  // namespace ddgeo
