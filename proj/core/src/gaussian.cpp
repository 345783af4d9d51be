#include "twf/gaussian.hpp"

#include <stdexcept>

namespace twf {

Eigen::MatrixXd covariance_of(const GroupSpec& spec, const Matrix& rho) {
    if (spec.kind() == SystemKind::FiniteWeyl)
        throw std::invalid_argument("covariance is a fermionic/mixed-spin notion");
    int m = spec.dim();
    if (rho.rows() != spec.hilbert_dim() || rho.cols() != spec.hilbert_dim())
        throw std::invalid_argument("state dimension mismatch");
    std::vector<Matrix> c(m + 1);
    for (int j = 1; j <= m; ++j) c[j] = majorana(spec, j);
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(m, m);
    std::complex<double> half_i(0.0, 0.5);
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) {
            std::complex<double> v = (half_i * (rho * (c[j] * c[k] - c[k] * c[j])).trace());
            if (std::abs(v.imag()) > 1e-10)
                throw std::runtime_error("covariance entry not real; state not Hermitian?");
            cov(j - 1, k - 1) = v.real();
            cov(k - 1, j - 1) = -v.real();
        }
    return cov;
}

namespace {

double pfaffian_recursive(const Eigen::MatrixXd& a) {
    Eigen::Index n = a.rows();
    if (n == 0) return 1.0;
    if (n == 2) return a(0, 1);
    double acc = 0.0;
    for (Eigen::Index j = 1; j < n; ++j) {
        if (a(0, j) == 0.0) continue;
        Eigen::MatrixXd minor(n - 2, n - 2);
        Eigen::Index r = 0;
        for (Eigen::Index i = 1; i < n; ++i) {
            if (i == j) continue;
            Eigen::Index s = 0;
            for (Eigen::Index k = 1; k < n; ++k) {
                if (k == j) continue;
                minor(r, s++) = a(i, k);
            }
            ++r;
        }
        double sign = (j % 2 == 1) ? 1.0 : -1.0;
        acc += sign * a(0, j) * pfaffian_recursive(minor);
    }
    return acc;
}

double pfaffian_tridiag(Eigen::MatrixXd a) {
    Eigen::Index n = a.rows();
    double sign = 1.0;
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        Eigen::VectorXd x = a.col(k).segment(k + 1, n - k - 1);
        double norm = x.norm();
        if (norm < 1e-300) continue;  // column already clear; pfaffian has a zero factor
        double alpha = (x(0) >= 0) ? -norm : norm;
        Eigen::VectorXd v = x;
        v(0) -= alpha;
        double vn = v.norm();
        if (vn < 1e-14 * norm) continue;  // already in tridiagonal position
        v /= vn;
        // P = I - 2 v v^T on the trailing block; det(P) = -1.
        auto blk = a.block(k + 1, k + 1, n - k - 1, n - k - 1);
        Eigen::MatrixXd tmp = blk - 2.0 * v * (v.transpose() * blk);
        blk = tmp - 2.0 * (tmp * v) * v.transpose();
        Eigen::VectorXd col = a.col(k).segment(k + 1, n - k - 1);
        a.col(k).segment(k + 1, n - k - 1) = col - 2.0 * v * v.dot(col);
        a.row(k).segment(k + 1, n - k - 1) = a.col(k).segment(k + 1, n - k - 1).transpose() * -1.0;
        sign = -sign;
    }
    double pf = sign;
    for (Eigen::Index i = 0; i + 1 < n; i += 2) pf *= a(i, i + 1);
    return pf;
}

}  // namespace

double pfaffian(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("pfaffian needs a square matrix");
    if (a.rows() == 0) return 1.0;
    if ((a + a.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("pfaffian needs an antisymmetric matrix");
    if (a.rows() % 2 != 0) return 0.0;
    if (a.rows() <= 8) return pfaffian_recursive(a);
    return pfaffian_tridiag(a);
}

std::complex<double> wick_moment(const Eigen::MatrixXd& m, const std::vector<int>& idx) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] < 1 || idx[t] > m.rows()) throw std::invalid_argument("index out of range");
        if (t > 0 && idx[t] <= idx[t - 1]) throw std::invalid_argument("indices must ascend");
    }
    if (idx.size() % 2 != 0) return 0.0;
    std::size_t k = idx.size() / 2;
    Eigen::MatrixXd sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = m(idx[i] - 1, idx[j] - 1);
    // (-i)^k
    static const std::complex<double> cyc[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return cyc[k % 4] * pfaffian(sub);
}

PhaseFunction gaussian_char(const WeylSystem& sys, const Eigen::MatrixXd& m) {
    const GroupSpec& spec = sys.spec();
    if (spec.kind() == SystemKind::FiniteWeyl)
        throw std::invalid_argument("Gaussian states are fermionic/mixed-spin only");
    if (m.rows() != spec.dim() || (m + m.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("covariance must be antisymmetric of size 2n");
    PhaseFunction chi;
    chi.values = Eigen::VectorXcd::Zero(sys.order());
    for (std::int64_t i = 0; i < sys.order(); ++i) {
        const GroupElement& x = sys.elements()[i];
        std::vector<int> idx;
        for (int j = 0; j < spec.dim(); ++j)
            if (x.c[j]) idx.push_back(j + 1);
        // chi(x) = Tr(W(x)^* rho); reversing the Majorana string gives (-1)^k.
        double rev = (idx.size() / 2) % 2 == 0 ? 1.0 : -1.0;
        chi.values(i) = rev * std::conj(sys.cocycle().xi(x)) * wick_moment(m, idx);
    }
    return chi;
}

Eigen::MatrixXd block_diag_covariance(const std::vector<double>& a) {
    int n = static_cast<int>(a.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        m(2 * j, 2 * j + 1) = a[j];
        m(2 * j + 1, 2 * j) = -a[j];
    }
    return m;
}

namespace {

bool is_block_diag(const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0 && !(j == i + 1 && i % 2 == 0) && !(i == j + 1 && j % 2 == 0))
                return false;
    return true;
}

Matrix gaussian_product_form(const GroupSpec& spec, const Eigen::MatrixXd& m) {
    Eigen::Index dim = spec.hilbert_dim();
    Matrix rho = Matrix::Identity(dim, dim);
    std::complex<double> i1(0.0, 1.0);
    for (int j = 0; j < spec.modes(); ++j) {
        double aj = m(2 * j, 2 * j + 1);
        rho = rho * (Matrix::Identity(dim, dim) +
                     i1 * aj * majorana(spec, 2 * j + 1) * majorana(spec, 2 * j + 2));
    }
    return rho / std::pow(2.0, spec.modes());
}

}  // namespace

Matrix gaussian_from_covariance(const WeylSystem& sys, const Eigen::MatrixXd& m) {
    Matrix rho = twisted_fourier(sys, gaussian_char(sys, m));
    if (is_block_diag(m)) {
        Matrix alt = gaussian_product_form(sys.spec(), m);
        if ((rho - alt).cwiseAbs().maxCoeff() > 1e-9)
            throw std::runtime_error("moment and product constructions disagree");
    }
    return rho;
}

bool is_gaussian(const WeylSystem& sys, const Matrix& rho, double tol) {
    Eigen::MatrixXd m = covariance_of(sys.spec(), rho);
    Matrix g = twisted_fourier(sys, gaussian_char(sys, m));
    return (rho - g).cwiseAbs().maxCoeff() < tol;
}

}  // namespace twf
