#include "twf/transforms.hpp"

#include <Eigen/Eigenvalues>

namespace twf {

bool is_valid_state(const Matrix& rho, double tol) {
    if (rho.rows() != rho.cols()) return false;
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(rho.trace() - std::complex<double>(1.0)) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

PhaseFunction char_function(const WeylSystem& sys, const Matrix& rho) {
    if (rho.rows() != sys.hilbert_dim() || rho.cols() != sys.hilbert_dim())
        throw std::invalid_argument("state dimension does not match the system");
    const std::int64_t order = sys.order();
    PhaseFunction f;
    f.values.resize(order);
    for (std::int64_t i = 0; i < order; ++i)
        f.values[i] = (sys.weyl(i).adjoint() * rho).trace();
    return f;
}

Matrix twisted_fourier(const WeylSystem& sys, const PhaseFunction& f) {
    const std::int64_t order = sys.order();
    Matrix out = Matrix::Zero(sys.hilbert_dim(), sys.hilbert_dim());
    for (std::int64_t i = 0; i < order; ++i) out += f.values[i] * sys.weyl(i);
    return out * sys.point_weight();
}

PhaseFunction twisted_convolve(const WeylSystem& sys, const PhaseFunction& f,
                               const PhaseFunction& g) {
    const auto& spec = sys.spec();
    const auto& elems = sys.elements();
    const std::int64_t order = sys.order();
    PhaseFunction out;
    out.values = Eigen::VectorXcd::Zero(order);
    for (std::int64_t xi = 0; xi < order; ++xi) {
        std::complex<double> acc = 0.0;
        for (std::int64_t yi = 0; yi < order; ++yi) {
            const GroupElement diff = add(spec, elems[xi], neg(spec, elems[yi]));
            acc += f.values[yi] * g.values[element_index(spec, diff)] *
                   sys.cocycle().eval(elems[yi], diff);
        }
        out.values[xi] = acc * sys.point_weight();
    }
    return out;
}

PhaseFunction twisted_involution(const WeylSystem& sys, const PhaseFunction& f) {
    const auto& spec = sys.spec();
    const auto& elems = sys.elements();
    const std::int64_t order = sys.order();
    PhaseFunction out;
    out.values.resize(order);
    for (std::int64_t i = 0; i < order; ++i) {
        const GroupElement nx = neg(spec, elems[i]);
        out.values[i] = std::conj(sys.cocycle().eval(elems[i], nx) *
                                  f.values[element_index(spec, nx)]);
    }
    return out;
}

Matrix symplectic_fourier_kernel(const WeylSystem& sys) {
    const auto& elems = sys.elements();
    const std::int64_t order = sys.order();
    Matrix k(order, order);
    for (std::int64_t x = 0; x < order; ++x)
        for (std::int64_t y = 0; y < order; ++y)
            k(x, y) = std::conj(sys.cocycle().phi(elems[x], elems[y])) * sys.point_weight();
    return k;
}

PhaseFunction symplectic_fourier(const WeylSystem& sys, const PhaseFunction& f) {
    const auto& elems = sys.elements();
    const std::int64_t order = sys.order();
    PhaseFunction out;
    out.values.resize(order);
    for (std::int64_t x = 0; x < order; ++x) {
        std::complex<double> acc = 0.0;
        for (std::int64_t y = 0; y < order; ++y)
            acc += f.values[y] * std::conj(sys.cocycle().phi(elems[x], elems[y]));
        out.values[x] = acc * sys.point_weight();
    }
    return out;
}

PhaseFunction inverse_symplectic_fourier(const WeylSystem& sys, const PhaseFunction& F) {
    const auto& elems = sys.elements();
    const std::int64_t order = sys.order();
    PhaseFunction out;
    out.values.resize(order);
    for (std::int64_t y = 0; y < order; ++y) {
        std::complex<double> acc = 0.0;
        for (std::int64_t x = 0; x < order; ++x)
            acc += F.values[x] * sys.cocycle().phi(elems[x], elems[y]);
        out.values[y] = acc * sys.point_weight();
    }
    return out;
}

PhaseFunction wigner(const WeylSystem& sys, const Matrix& rho) {
    return symplectic_fourier(sys, char_function(sys, rho));
}

ExpectationPair expectation_identity(const WeylSystem& sys, const Matrix& rho,
                                     const Matrix& observable) {
    if (!sys.cocycle().normalized())
        throw std::invalid_argument("expectation identity requires a normalized cocycle");
    if ((observable - observable.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("observable must be Hermitian");
    const PhaseFunction wr = wigner(sys, rho);
    const PhaseFunction wa = wigner(sys, observable);
    ExpectationPair out;
    out.quantum = (rho * observable).trace().real();
    out.classical =
        (wr.values.array() * wa.values.array()).sum().real() * sys.point_weight();
    return out;
}

bool intertwiner_check(const WeylSystem& sys, double tol) {
    if (sys.order() > 4096) throw std::invalid_argument("group too large");
    const auto& elems = sys.elements();
    const std::int64_t order = sys.order();
    for (const auto& x : elems) {
        const Matrix lam = sys.regular_rep(x);
        for (std::int64_t b = 0; b < order; ++b) {
            PhaseFunction f;
            f.values = lam.col(b);
            const Matrix lhs = twisted_fourier(sys, f);
            PhaseFunction delta;
            delta.values = Eigen::VectorXcd::Zero(order);
            delta.values[b] = 1.0;
            const Matrix rhs = sys.weyl(x) * twisted_fourier(sys, delta);
            if ((lhs - rhs).cwiseAbs().maxCoeff() > tol) return false;
        }
    }
    return true;
}

bool is_wigner_nonneg(const WeylSystem& sys, const Matrix& rho, double tol) {
    const PhaseFunction w = wigner(sys, rho);
    return w.values.real().minCoeff() >= -tol && w.values.imag().cwiseAbs().maxCoeff() <= tol;
}

}  // namespace twf
