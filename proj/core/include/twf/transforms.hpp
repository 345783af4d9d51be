#pragma once

#include "twf/weyl.hpp"

namespace twf {

/// Complex function on G, dense, indexed by the canonical enumeration.
struct PhaseFunction {
    Eigen::VectorXcd values;
};

bool is_valid_state(const Matrix& rho, double tol = 1e-10);

/// chi_rho(x) = Tr(W(x)^* rho).
PhaseFunction char_function(const WeylSystem& sys, const Matrix& rho);

/// F_sigma(f) = sum_x f(x) W(x) mu; left inverse of char_function.
Matrix twisted_fourier(const WeylSystem& sys, const PhaseFunction& f);

/// (f *_sigma g)(x) = sum_y f(y) g(x-y) sigma(y,x-y) mu.
PhaseFunction twisted_convolve(const WeylSystem& sys, const PhaseFunction& f,
                               const PhaseFunction& g);

/// f^{star sigma}(x) = conj(sigma(x,-x) f(-x)).
PhaseFunction twisted_involution(const WeylSystem& sys, const PhaseFunction& f);

/// F(x) = sum_y f(y) conj(Phi(x)(y)) mu.
PhaseFunction symplectic_fourier(const WeylSystem& sys, const PhaseFunction& f);
PhaseFunction inverse_symplectic_fourier(const WeylSystem& sys, const PhaseFunction& F);

/// Kernel matrix K with (K f)(x) = symplectic_fourier(f)(x); handy for
/// batched Wigner evaluation.
Matrix symplectic_fourier_kernel(const WeylSystem& sys);

/// Wigner function: symplectic Fourier transform of chi_rho.
PhaseFunction wigner(const WeylSystem& sys, const Matrix& rho);

struct ExpectationPair {
    double quantum;
    double classical;
};

/// Tr(rho A) vs sum_y W_rho(y) W_A(y) mu_hat; requires a normalized cocycle.
ExpectationPair expectation_identity(const WeylSystem& sys, const Matrix& rho,
                                     const Matrix& observable);

/// Checks F_sigma(lambda_sigma(x) f) = W(x) F_sigma(f) for all x and a basis
/// of functions f (Plancherel intertwiner property).
bool intertwiner_check(const WeylSystem& sys, double tol = 1e-10);

bool is_wigner_nonneg(const WeylSystem& sys, const Matrix& rho, double tol = 1e-10);

}  // namespace twf
