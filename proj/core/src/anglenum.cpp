#include "twf/anglenum.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace twf {

namespace {

constexpr double kPi = 3.14159265358979323846;

double frac(double x) { return x - std::floor(x); }

std::complex<double> cis(double a) { return {std::cos(a), std::sin(a)}; }

/// I(s, n) = integral over alpha in [-1/2, 1/2) of exp(pi i s alpha)
/// exp(-2 pi i n alpha); real by symmetry. Kronecker delta for even s,
/// a sinc tail for odd s.
double half_angle_integral(int s, int n) {
    if (s % 2 == 0) return (s == 2 * n) ? 1.0 : 0.0;
    int t = s - 2 * n;  // odd, never zero
    // 2 sin(pi t / 2) / (pi t)
    double sign = (((t - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    if (t < 0) sign = (((-t - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    return 2.0 * sign / (kPi * t);
}

}  // namespace

TorusState make_torus_state(int band, Eigen::VectorXcd coeffs, int grid) {
    if (band < 0) throw std::invalid_argument("band must be nonnegative");
    if (coeffs.size() != 2 * band + 1) throw std::invalid_argument("need 2*band+1 coefficients");
    if (grid % 2 != 0 || grid < 4 * band + 4)
        throw std::invalid_argument("grid must be even and at least 4*band+4");
    if (std::abs(coeffs.squaredNorm() - 1.0) > 1e-10)
        throw std::invalid_argument("state coefficients must have unit norm");
    return TorusState{band, std::move(coeffs), grid};
}

AngleNumberWigner mukunda_wigner(const TorusState& psi) {
    int mb = psi.band, g = psi.grid;
    AngleNumberWigner w;
    w.band = mb;
    w.grid = g;
    w.values = Eigen::MatrixXd::Zero(g, 4 * mb + 1);
    for (int col = 0; col <= 4 * mb; ++col) {
        int n = col - 2 * mb;
        // W(theta, n) = sum_{m, m'} c_m conj(c_{m'}) e_{m - m'}(theta) I(m + m', n)
        for (int m = -mb; m <= mb; ++m)
            for (int mp = -mb; mp <= mb; ++mp) {
                double iv = half_angle_integral(m + mp, n);
                if (iv == 0.0) continue;
                std::complex<double> amp =
                    psi.coeffs(m + mb) * std::conj(psi.coeffs(mp + mb)) * iv;
                for (int k = 0; k < g; ++k) {
                    std::complex<double> term = amp * cis(2.0 * kPi * (m - mp) * k / g);
                    w.values(k, col) += term.real();
                }
            }
    }
    return w;
}

double wigner_total(const AngleNumberWigner& w) {
    // Rectangle rule in theta is exact: every row is a trigonometric
    // polynomial of degree <= 2*band < grid.
    return w.values.sum() / w.grid;
}

std::complex<double> char_function_anglenum(const TorusState& psi, double theta, int n) {
    std::complex<double> acc = 0.0;
    int mb = psi.band;
    for (int m = -mb; m <= mb; ++m) {
        int mp = m - n;
        if (mp < -mb || mp > mb) continue;
        acc += psi.coeffs(m + mb) * std::conj(psi.coeffs(mp + mb)) * cis(2.0 * kPi * m * theta);
    }
    return acc;
}

namespace {

std::complex<double> sigma_toruszz(double th1, int n1, double th2, int n2, bool normalized) {
    std::complex<double> base = cis(2.0 * kPi * n1 * frac(th2));
    if (!normalized) return base;
    // coboundary with xi(theta, n) = exp(pi i n {theta})
    double e = n1 * frac(th1) + n2 * frac(th2) - (n1 + n2) * frac(th1 + th2);
    return base * cis(kPi * e);
}

}  // namespace

bool check_toruszz_automorphism(double alpha, int m, int k, bool normalized, int samples) {
    if (m != 1 && m != -1) throw std::invalid_argument("m must be +-1");
    if (k != 1 && k != -1) throw std::invalid_argument("k must be +-1");
    std::vector<double> thetas = {0.0, frac(1.0 - alpha), frac((1.0 + alpha) / 2.0)};
    for (int j = 1; j <= samples; ++j) thetas.push_back(frac(j / (samples + 0.618033988749895)));
    // Complementary angles: the normalized check can only fail on pairs with
    // theta_1 + theta_2 integral, so make sure such pairs exist in the grid.
    std::size_t base_count = thetas.size();
    for (std::size_t i = 0; i < base_count; ++i) thetas.push_back(frac(1.0 - thetas[i]));
    std::vector<int> ns = {-2, -1, 0, 1, 2, 3};
    for (double t1 : thetas)
        for (int n1 : ns)
            for (double t2 : thetas)
                for (int n2 : ns) {
                    double st1 = frac(m * t1 + n1 * alpha);
                    double st2 = frac(m * t2 + n2 * alpha);
                    std::complex<double> lhs =
                        sigma_toruszz(st1, n1 * k, st2, n2 * k, normalized);
                    std::complex<double> rhs = sigma_toruszz(t1, n1, t2, n2, normalized);
                    if (std::abs(lhs - rhs) > 1e-12) return false;
                }
    return true;
}

}  // namespace twf
