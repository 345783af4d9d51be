#include "twf/weyl.hpp"

namespace twf {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// Apply a single-qubit operator to tensor factor `mode` (0-based, fastest
// digit first) of a 2^n-dimensional operator product under construction.
void apply_site(Matrix& acc, int n, int mode, const Eigen::Matrix2cd& op) {
    const Eigen::Index dim = acc.rows();
    Matrix site = Matrix::Zero(dim, dim);
    const Eigen::Index bit = Eigen::Index{1} << mode;
    for (Eigen::Index v = 0; v < dim; ++v) {
        const Eigen::Index b = (v & bit) ? 1 : 0;
        for (Eigen::Index a = 0; a < 2; ++a) {
            const Eigen::Index u = (v & ~bit) | (a ? bit : 0);
            if (op(a, b) != 0.0) site(u, v) = op(a, b);
        }
    }
    acc = site * acc;
    (void)n;
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}
Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << 0, -kI, kI, 0;
    return m;
}
Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace

Matrix majorana(const GroupSpec& spec, int j) {
    if (spec.kind() == SystemKind::FiniteWeyl)
        throw std::invalid_argument("majorana operators require a fermionic or mixed-spin spec");
    const int n = spec.modes();
    if (j < 1 || j > 2 * n) throw std::out_of_range("majorana index out of range");
    const int mode = (j + 1) / 2;  // 1-based mode carrying X or Y
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix acc = Matrix::Identity(dim, dim);
    for (int i = 1; i < mode; ++i) {
        // Z for fermions; Z_{eps(i,mode)} in {I, Z} for mixed spin.
        int sign = -1;
        if (spec.kind() == SystemKind::MixedSpin) sign = spec.eps()(i - 1, mode - 1);
        if (sign == -1) apply_site(acc, n, i - 1, pauli_z());
    }
    apply_site(acc, n, mode - 1, (j % 2 == 1) ? pauli_x() : pauli_y());
    return acc;
}

WeylSystem::WeylSystem(GroupSpec spec, Cocycle cocycle)
    : spec_(std::move(spec)), cocycle_(std::move(cocycle)), hdim_(spec_.hilbert_dim()) {
    if (!(cocycle_.spec() == spec_))
        throw std::invalid_argument("cocycle built on a different group spec");
    const std::int64_t order = spec_.order();
    if (order * hdim_ * hdim_ > (std::int64_t{1} << 25))
        throw std::overflow_error("Weyl cache would exceed the dense-storage budget");
    elements_ = enumerate(spec_);
    cache_.reserve(order);
    for (const auto& x : elements_) cache_.push_back(build(x));
}

Matrix WeylSystem::build(const GroupElement& x) const {
    Matrix w;
    if (spec_.kind() == SystemKind::FiniteWeyl) {
        // W(x,p) = T_x M_{gamma_p}: column v gets phase omega^{p.v} at row v+x.
        const int n = spec_.modes();
        const int d = spec_.d();
        w = Matrix::Zero(hdim_, hdim_);
        for (Eigen::Index v = 0; v < hdim_; ++v) {
            Eigen::Index rest = v;
            int phase = 0;
            Eigen::Index row = 0;
            Eigen::Index stride = 1;
            for (int k = 0; k < n; ++k) {
                const int vk = static_cast<int>(rest % d);
                rest /= d;
                phase = (phase + x.c[n + k] * vk) % d;
                row += ((vk + x.c[k]) % d) * stride;
                stride *= d;
            }
            w(row, v) = unit_phase(phase, d);
        }
    } else {
        w = Matrix::Identity(hdim_, hdim_);
        for (int j = 1; j <= 2 * spec_.modes(); ++j) {
            if (x.c[j - 1]) w = w * majorana(spec_, j);
        }
    }
    if (cocycle_.normalized()) w *= cocycle_.xi(x);
    return w;
}

const Matrix& WeylSystem::weyl(const GroupElement& x) const {
    return cache_[element_index(spec_, x)];
}

Matrix WeylSystem::regular_rep(const GroupElement& x) const {
    const std::int64_t order = spec_.order();
    Matrix m = Matrix::Zero(order, order);
    for (std::int64_t v = 0; v < order; ++v) {
        const GroupElement& ev = elements_[v];
        const std::int64_t row = element_index(spec_, add(spec_, x, ev));
        m(row, v) = cocycle_.eval(x, ev);
    }
    return m;
}

void WeylSystem::corrupt_swap(std::int64_t a, std::int64_t b) {
    std::swap(cache_[a], cache_[b]);
}

void WeylSystem::corrupt_duplicate(std::int64_t a, std::int64_t b) {
    cache_[b] = cache_[a];
}

double projective_rep_error(const WeylSystem& sys) {
    const auto& elems = sys.elements();
    const auto& spec = sys.spec();
    double worst = 0.0;
    for (const auto& x : elems) {
        const Matrix& wx = sys.weyl(x);
        for (const auto& y : elems) {
            const Matrix lhs = wx * sys.weyl(y);
            const Matrix rhs = sys.cocycle().eval(x, y) * sys.weyl(add(spec, x, y));
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

bool verify_projective_rep(const WeylSystem& sys, double tol) {
    if (sys.order() > 4096) throw std::invalid_argument("group too large for exhaustive check");
    return projective_rep_error(sys) < tol;
}

bool verify_irreducible_basis(const WeylSystem& sys, double tol) {
    const std::int64_t order = sys.order();
    const Eigen::Index dim = sys.hilbert_dim();
    if (order != dim * dim) return false;
    Matrix stacked(order, dim * dim);
    for (std::int64_t i = 0; i < order; ++i) {
        const Matrix& w = sys.weyl(i);
        stacked.row(i) = Eigen::Map<const Eigen::VectorXcd>(w.data(), dim * dim).transpose();
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(stacked);
    qr.setThreshold(tol);
    if (qr.rank() != order) return false;
    if (sys.spec().kind() != SystemKind::FiniteWeyl) {
        for (std::int64_t i = 0; i < order; ++i)
            for (std::int64_t j = 0; j < order; ++j) {
                const std::complex<double> t = (sys.weyl(i).adjoint() * sys.weyl(j)).trace();
                const std::complex<double> want = (i == j) ? std::complex<double>(dim, 0) : 0.0;
                if (std::abs(t - want) > tol * dim) return false;
            }
    }
    return true;
}

double weyl_conjugation_error(const WeylSystem& sys) {
    const auto& elems = sys.elements();
    double worst = 0.0;
    for (const auto& y : elems) {
        const Matrix& wy = sys.weyl(y);
        for (const auto& x : elems) {
            const Matrix lhs = wy * sys.weyl(x) * wy.adjoint();
            const Matrix rhs = sys.cocycle().phi(y, x) * sys.weyl(x);
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

}  // namespace twf
