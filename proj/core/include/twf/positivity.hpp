#pragma once

#include <array>
#include <optional>

#include "twf/gaussian.hpp"

namespace twf {

enum class PositivityClassifier {
    OneModeUnnormalized,
    OneModeNormalized,
    TwoModeUnnormalized,
    GaussianUnnormalized,
    GaussianNormalized,
    Oracle,
};

struct PositivityVerdict {
    bool nonneg = false;
    std::optional<GroupElement> witness_point;  // a point with W < -tol when !nonneg
    PositivityClassifier classifier_used = PositivityClassifier::Oracle;
    bool form_mismatch = false;  // 2-mode state not of the required matrix shape
};

/// Direct Wigner sweep; witness is the argmin point when negative.
PositivityVerdict oracle_verdict(const WeylSystem& sys, const Matrix& rho, double tol = 1e-9);

/// W >= 0 iff a = d = 1/2 and -1/2 <= Re b +- Im b <= 1/2.
PositivityVerdict onemode_unnormalized(const Matrix& rho, double tol = 1e-9);

/// W~ >= 0 iff x^2 + y^2 <= a(1-a) and |x - y| <= a, |x + y| <= 1 - a for
/// rho = [[a, x+iy], [x-iy, 1-a]].
PositivityVerdict onemode_normalized(const Matrix& rho, double tol = 1e-9);

/// The 2-mode characterization: a five-parameter matrix shape plus eight
/// linear inequalities. States off the shape are never nonnegative.
PositivityVerdict twomode_unnormalized(const Matrix& rho, double tol = 1e-9);

/// Extract (a_1..a_5) if rho has the 2-mode shape.
std::optional<std::array<double, 5>> twomode_form_params(const Matrix& rho, double tol = 1e-10);
Matrix twomode_form_state(const std::array<double, 5>& a);
bool twomode_form_inequalities(const std::array<double, 5>& a, double tol = 1e-9);

/// Among Gaussian states only the maximally mixed one (M = 0) has W >= 0.
PositivityVerdict gaussian_unnormalized(const WeylSystem& sys, const Eigen::MatrixXd& m,
                                        double tol = 1e-9);

/// Block-diagonal Gaussian under the normalized cocycle: prod(|a_j|+1) <= 2
/// is sufficient for W~ >= 0; beyond it the verdict falls back to the oracle.
PositivityVerdict gaussian_normalized(const WeylSystem& sys, const std::vector<double>& a,
                                      double tol = 1e-9);

}  // namespace twf
