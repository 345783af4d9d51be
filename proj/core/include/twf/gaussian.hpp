#pragma once

#include "twf/transforms.hpp"

namespace twf {

/// Majorana covariance M_{jk} = (i/2) Tr(rho [c_j, c_k]); real antisymmetric
/// 2n x 2n. Not defined for Weyl systems.
Eigen::MatrixXd covariance_of(const GroupSpec& spec, const Matrix& rho);

/// Pfaffian of a real antisymmetric matrix; recursive expansion up to 8x8,
/// Householder tridiagonalization above.
double pfaffian(const Eigen::MatrixXd& a);

/// Gaussian moment Tr(rho c_{j1} ... c_{jm}) for ascending 1-based indices.
/// Zero for odd m; (-i)^{m/2} pf(M[J]) otherwise.
std::complex<double> wick_moment(const Eigen::MatrixXd& m, const std::vector<int>& idx);

/// Characteristic function of the Gaussian state with covariance m, in the
/// system's cocycle convention.
PhaseFunction gaussian_char(const WeylSystem& sys, const Eigen::MatrixXd& m);

/// The Gaussian state itself, by twisted Fourier inversion of its moments.
/// For block diagonal m the product formula 2^n rho = prod_j (1 + i a_j
/// c_{2j-1} c_{2j}) is computed as a cross-check and must agree to 1e-9.
Matrix gaussian_from_covariance(const WeylSystem& sys, const Eigen::MatrixXd& m);

/// Direct sum of [[0, a_j], [-a_j, 0]] blocks.
Eigen::MatrixXd block_diag_covariance(const std::vector<double>& a);

/// rho equals the Gaussian state with its own covariance.
bool is_gaussian(const WeylSystem& sys, const Matrix& rho, double tol = 1e-8);

}  // namespace twf
