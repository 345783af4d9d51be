#pragma once

#include <complex>

#include <Eigen/Dense>

namespace twf {

/// Band-limited state on the torus: psi = sum_{|m| <= band} coeffs(m+band) e_m
/// with e_m(theta) = exp(2 pi i m theta), evaluated on grid points k/grid.
struct TorusState {
    int band;
    Eigen::VectorXcd coeffs;  // indexed -band..band
    int grid;
};

/// Validates the band/grid relation (grid even, >= 4*band+4) and unit norm.
TorusState make_torus_state(int band, Eigen::VectorXcd coeffs, int grid);

/// Wigner table on the angle-number phase space: rows are grid angles
/// theta_k = k/grid, columns are number offsets n = -2*band .. 2*band.
struct AngleNumberWigner {
    int band;
    int grid;
    Eigen::MatrixXd values;
};

/// Mukunda half-angle autocorrelation Wigner function, computed exactly in
/// the Fourier domain (the alpha-integral of a trigonometric polynomial).
AngleNumberWigner mukunda_wigner(const TorusState& psi);

/// sum_n integral of the Wigner row over theta (rectangle rule, exact at
/// this band limit); 1 for a unit state.
double wigner_total(const AngleNumberWigner& w);

/// chi_{|psi><psi|}(theta, n) = sum_m c_{m} conj(c_{m-n}) e_m(theta).
std::complex<double> char_function_anglenum(const TorusState& psi, double theta, int n);

/// Does S(theta, n) = (m theta + n alpha, n k) preserve the canonical
/// (normalized: with xi(theta, n) = exp(pi i n theta)) cocycle on T x Z?
/// Checked on a deterministic grid including the critical angles 1 - alpha
/// and (1 + alpha)/2.
bool check_toruszz_automorphism(double alpha, int m, int k, bool normalized, int samples = 8);

}  // namespace twf
