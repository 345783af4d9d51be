#include "twf/positivity.hpp"

#include <array>
#include <stdexcept>

namespace twf {

namespace {

const WeylSystem& fermion_system(int modes, bool normalized) {
    // Small fixed systems; cache per (modes, normalized).
    static std::vector<WeylSystem> cache = [] {
        std::vector<WeylSystem> v;
        for (int n = 1; n <= 3; ++n) {
            GroupSpec spec = GroupSpec::fermionic(n);
            v.emplace_back(spec, Cocycle::fermionic(spec));
            v.emplace_back(spec, Cocycle::fermionic_normalized(spec));
        }
        return v;
    }();
    if (modes < 1 || modes > 3) throw std::invalid_argument("cached fermion systems cover n <= 3");
    return cache[2 * (modes - 1) + (normalized ? 1 : 0)];
}

PositivityVerdict with_oracle_witness(const WeylSystem& sys, const Matrix& rho,
                                      PositivityVerdict v, double tol) {
    if (!v.nonneg) {
        // A point violates nonnegativity when the value is negative or has a
        // nonzero imaginary part (unnormalized Wigner functions are complex).
        PhaseFunction w = wigner(sys, rho);
        Eigen::Index arg = 0;
        double best = 0.0;
        for (Eigen::Index i = 0; i < w.values.size(); ++i) {
            double bad = std::max(-w.values(i).real(), std::abs(w.values(i).imag()));
            if (bad > best) {
                best = bad;
                arg = i;
            }
        }
        if (best > tol) v.witness_point = sys.elements()[arg];
    }
    return v;
}

}  // namespace

PositivityVerdict oracle_verdict(const WeylSystem& sys, const Matrix& rho, double tol) {
    PositivityVerdict v;
    v.classifier_used = PositivityClassifier::Oracle;
    v.nonneg = is_wigner_nonneg(sys, rho, tol);
    return with_oracle_witness(sys, rho, v, tol);
}

PositivityVerdict onemode_unnormalized(const Matrix& rho, double tol) {
    if (rho.rows() != 2 || rho.cols() != 2 || !is_valid_state(rho))
        throw std::invalid_argument("expected a 1-mode (qubit) state");
    double a = rho(0, 0).real();
    double rb = rho(0, 1).real(), ib = rho(0, 1).imag();
    PositivityVerdict v;
    v.classifier_used = PositivityClassifier::OneModeUnnormalized;
    v.nonneg = std::abs(a - 0.5) <= tol && std::abs(rb + ib) <= 0.5 + tol &&
               std::abs(rb - ib) <= 0.5 + tol;
    return with_oracle_witness(fermion_system(1, false), rho, v, tol);
}

PositivityVerdict onemode_normalized(const Matrix& rho, double tol) {
    if (rho.rows() != 2 || rho.cols() != 2 || !is_valid_state(rho))
        throw std::invalid_argument("expected a 1-mode (qubit) state");
    double a = rho(0, 0).real();
    double x = rho(0, 1).real(), y = rho(0, 1).imag();
    PositivityVerdict v;
    v.classifier_used = PositivityClassifier::OneModeNormalized;
    // The four Wigner values are a +- (x - y) and (1 - a) +- (x + y).
    v.nonneg = x * x + y * y <= a * (1.0 - a) + tol && std::abs(x - y) <= a + tol &&
               std::abs(x + y) <= 1.0 - a + tol;
    return with_oracle_witness(fermion_system(1, true), rho, v, tol);
}

namespace {

// c_1..c_4 and c_1 c_2 c_3 c_4 in the 2-mode representation.
const std::array<Matrix, 5>& twomode_basis() {
    static const std::array<Matrix, 5> ops = [] {
        GroupSpec spec = GroupSpec::fermionic(2);
        std::array<Matrix, 5> v;
        for (int j = 0; j < 4; ++j) v[j] = majorana(spec, j + 1);
        v[4] = v[0] * v[1] * v[2] * v[3];
        return v;
    }();
    return ops;
}

}  // namespace

std::optional<std::array<double, 5>> twomode_form_params(const Matrix& rho, double tol) {
    if (rho.rows() != 4 || rho.cols() != 4) throw std::invalid_argument("expected a 2-mode state");
    std::array<double, 5> a{};
    for (int j = 0; j < 5; ++j) a[j] = (rho * twomode_basis()[j]).trace().real();
    if ((rho - twomode_form_state(a)).cwiseAbs().maxCoeff() > tol) return std::nullopt;
    return a;
}

Matrix twomode_form_state(const std::array<double, 5>& a) {
    Matrix rho = Matrix::Identity(4, 4);
    for (int j = 0; j < 5; ++j) rho += a[j] * twomode_basis()[j];
    return rho / 4.0;
}

bool twomode_form_inequalities(const std::array<double, 5>& a, double tol) {
    double p = a[0] + a[1], q = a[0] - a[1];
    double r = a[2] + a[3], s = a[2] - a[3];
    return std::abs(p + r) <= 1.0 + a[4] + tol && std::abs(p - r) <= 1.0 + a[4] + tol &&
           std::abs(q + s) <= 1.0 + a[4] + tol && std::abs(q - s) <= 1.0 + a[4] + tol &&
           std::abs(p + s) <= 1.0 - a[4] + tol && std::abs(p - s) <= 1.0 - a[4] + tol &&
           std::abs(q + r) <= 1.0 - a[4] + tol && std::abs(q - r) <= 1.0 - a[4] + tol;
}

PositivityVerdict twomode_unnormalized(const Matrix& rho, double tol) {
    if (!is_valid_state(rho)) throw std::invalid_argument("expected a valid 2-mode state");
    PositivityVerdict v;
    v.classifier_used = PositivityClassifier::TwoModeUnnormalized;
    auto a = twomode_form_params(rho);
    if (!a) {
        v.form_mismatch = true;
        v.nonneg = false;
    } else {
        v.nonneg = twomode_form_inequalities(*a, tol);
    }
    return with_oracle_witness(fermion_system(2, false), rho, v, tol);
}

PositivityVerdict gaussian_unnormalized(const WeylSystem& sys, const Eigen::MatrixXd& m,
                                        double tol) {
    if (sys.cocycle().normalized())
        throw std::invalid_argument("gaussian_unnormalized needs the unnormalized cocycle");
    PositivityVerdict v;
    v.classifier_used = PositivityClassifier::GaussianUnnormalized;
    v.nonneg = m.cwiseAbs().maxCoeff() <= tol;
    return with_oracle_witness(sys, gaussian_from_covariance(sys, m), v, tol);
}

PositivityVerdict gaussian_normalized(const WeylSystem& sys, const std::vector<double>& a,
                                      double tol) {
    if (!sys.cocycle().normalized())
        throw std::invalid_argument("gaussian_normalized needs the normalized cocycle");
    if (static_cast<int>(a.size()) != sys.spec().modes())
        throw std::invalid_argument("one block coefficient per mode");
    double prod = 1.0;
    for (double aj : a) {
        if (std::abs(aj) > 1.0 + 1e-12) throw std::invalid_argument("|a_j| <= 1 required");
        prod *= std::abs(aj) + 1.0;
    }
    Matrix rho = gaussian_from_covariance(sys, block_diag_covariance(a));
    if (prod <= 2.0 + 1e-12) {
        PositivityVerdict v;
        v.classifier_used = PositivityClassifier::GaussianNormalized;
        v.nonneg = true;
        return v;
    }
    PositivityVerdict v = oracle_verdict(sys, rho, tol);
    return v;
}

}  // namespace twf
