#include "twf/symmetry.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include <Eigen/SVD>

namespace twf {

SymplecticMap identity_map(const GroupSpec& spec) {
    int m = 2 * spec.modes();
    SymplecticMap s;
    s.m.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) s.m[i][i] = 1;
    return s;
}

GroupElement apply_map(const GroupSpec& spec, const SymplecticMap& s, const GroupElement& x) {
    int m = 2 * spec.modes();
    GroupElement y;
    y.c.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        int acc = 0;
        for (int j = 0; j < m; ++j) acc += s.m[i][j] * x.c[j];
        y.c[i] = ((acc % spec.d()) + spec.d()) % spec.d();
    }
    return y;
}

SymplecticMap compose(const GroupSpec& spec, const SymplecticMap& a, const SymplecticMap& b) {
    int m = 2 * spec.modes();
    SymplecticMap r;
    r.m.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int acc = 0;
            for (int k = 0; k < m; ++k) acc += a.m[i][k] * b.m[k][j];
            r.m[i][j] = ((acc % spec.d()) + spec.d()) % spec.d();
        }
    return r;
}

namespace {

bool preserves_cocycle(const Cocycle& c, const SymplecticMap& s) {
    const GroupSpec& spec = c.spec();
    auto elems = enumerate(spec);
    std::vector<GroupElement> image(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) image[i] = apply_map(spec, s, elems[i]);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (c.eval_exp(image[i], image[j]) != c.eval_exp(elems[i], elems[j])) return false;
    return true;
}

}  // namespace

bool is_symplectic(const Cocycle& c, const SymplecticMap& s) {
    std::vector<std::vector<int>> raw = s.m;
    if (!invertible_mod(raw, c.spec().d())) return false;
    return preserves_cocycle(c, s);
}

std::optional<bool> symplectic_matrix_criterion(const Cocycle& c, const SymplecticMap& s) {
    auto b = c.bilinear_form();
    if (!b) return std::nullopt;
    int d = c.spec().d();
    int m = static_cast<int>(b->size());
    // S^T B S == B mod d
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            long acc = 0;
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    acc += static_cast<long>(s.m[k][i]) * (*b)[k][l] * s.m[l][j];
            if (((acc - (*b)[i][j]) % d + d) % d != 0) return false;
        }
    return true;
}

std::int64_t symplectic_search_budget() {
    if (const char* env = std::getenv("TW_MAX_SEARCH")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return std::int64_t{1} << 24;
}

SymplecticEnumeration enumerate_symplectic(const Cocycle& c, std::int64_t budget) {
    const GroupSpec& spec = c.spec();
    int d = spec.d();
    int m = 2 * spec.modes();
    int cells = m * m;
    std::int64_t total = 1;
    for (int i = 0; i < cells; ++i) {
        if (total > budget / d + 1) {
            total = budget + 1;
            break;
        }
        total *= d;
    }
    if (total > budget)
        throw std::runtime_error("symplectic search space exceeds budget (TW_MAX_SEARCH)");

    auto elems = enumerate(spec);
    std::int64_t n = static_cast<std::int64_t>(elems.size());

    // Exact exponent table makes the pair check a lookup per pair.
    std::vector<int> exps;
    bool use_table = n <= 1024;
    if (use_table) {
        exps.resize(static_cast<std::size_t>(n) * n);
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j)
                exps[i * n + j] = c.eval_exp(elems[i], elems[j]);
    }

    SymplecticEnumeration out;
    out.candidates = total;
    SymplecticMap s;
    s.m.assign(m, std::vector<int>(m, 0));
    std::vector<std::int64_t> image(n);

    for (std::int64_t code = 0; code < total; ++code) {
        // Row-major decode, first entry most significant: ascending code order
        // is lexicographic order of the flattened matrix.
        std::int64_t rem = code;
        for (int cell = cells - 1; cell >= 0; --cell) {
            s.m[cell / m][cell % m] = static_cast<int>(rem % d);
            rem /= d;
        }
        if (!invertible_mod(s.m, d)) continue;

        bool ok = true;
        if (use_table) {
            for (std::int64_t i = 0; i < n; ++i)
                image[i] = element_index(spec, apply_map(spec, s, elems[i]));
            for (std::int64_t i = 0; i < n && ok; ++i)
                for (std::int64_t j = 0; j < n; ++j)
                    if (exps[image[i] * n + image[j]] != exps[i * n + j]) {
                        ok = false;
                        break;
                    }
        } else {
            ok = preserves_cocycle(c, s);
        }

        auto crit = symplectic_matrix_criterion(c, s);
        if (crit && *crit != ok) out.criterion_consistent = false;
        if (ok) out.maps.push_back(s);
    }
    return out;
}

Matrix phase_normalize(const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (std::abs(m(i, j)) > 1e-8) return m * (std::conj(m(i, j)) / std::abs(m(i, j)));
    return m;
}

bool equal_mod_phase(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (phase_normalize(a) - phase_normalize(b)).cwiseAbs().maxCoeff() < tol;
}

namespace {

Matrix random_matrix(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eed1234abcdef01ull);
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
    return a;
}

Matrix unitarize(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix average_intertwiner(const WeylSystem& sys, const std::vector<std::int64_t>& s_table,
                           const Eigen::VectorXcd& xi_table, std::uint64_t seed) {
    Eigen::Index dim = sys.hilbert_dim();
    double mu = sys.point_weight();
    for (int attempt = 0; attempt < 8; ++attempt) {
        Matrix a = random_matrix(dim, seed + 7919ull * static_cast<std::uint64_t>(attempt));
        Matrix u0 = Matrix::Zero(dim, dim);
        for (std::int64_t i = 0; i < sys.order(); ++i)
            u0 += xi_table(i) * sys.weyl(s_table[i]) * a * sys.weyl(i).adjoint() * mu;
        Eigen::JacobiSVD<Matrix> svd(u0, Eigen::ComputeThinU | Eigen::ComputeThinV);
        if (svd.singularValues()(dim - 1) > 1e-8 * svd.singularValues()(0))
            return svd.matrixU() * svd.matrixV().adjoint();
    }
    throw std::runtime_error("intertwiner averaging produced a singular matrix");
}

}  // namespace

Matrix realize_from_witness(const WeylSystem& sys, const std::vector<std::int64_t>& s_table,
                            const Eigen::VectorXcd& xi_table, std::uint64_t seed) {
    Matrix u1 = average_intertwiner(sys, s_table, xi_table, seed);
    Matrix u2 = average_intertwiner(sys, s_table, xi_table, seed + 1000003ull);
    // Schur: any two averaged intertwiners agree mod phase.
    if (!equal_mod_phase(u1, u2, 1e-8))
        throw std::runtime_error("intertwiner not unique mod phase; representation not irreducible");
    // Sanity: U W(x) U^* = xi(x) W(Sx).
    for (std::int64_t i = 0; i < sys.order(); ++i) {
        Matrix lhs = u1 * sys.weyl(i) * u1.adjoint();
        Matrix rhs = xi_table(i) * sys.weyl(s_table[i]);
        if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-8)
            throw std::runtime_error("realized unitary fails the witness relation");
    }
    return phase_normalize(u1);
}

CliffordElement realize_clifford(const WeylSystem& sys, const GroupElement& y,
                                 const SymplecticMap& s, std::uint64_t seed) {
    const Cocycle& c = sys.cocycle();
    if (!is_symplectic(c, s)) throw std::invalid_argument("map is not in Sp(G, sigma)");
    const GroupSpec& spec = sys.spec();
    std::int64_t n = sys.order();
    std::vector<std::int64_t> s_table(n);
    Eigen::VectorXcd xi = Eigen::VectorXcd::Ones(n);
    for (std::int64_t i = 0; i < n; ++i)
        s_table[i] = element_index(spec, apply_map(spec, s, sys.elements()[i]));
    Matrix u_s = realize_from_witness(sys, s_table, xi, seed);
    CliffordElement out;
    out.y = y;
    out.s = s;
    out.unitary = phase_normalize(sys.weyl(y) * u_s);
    return out;
}

std::optional<GeneralizedCliffordWitness> detect_generalized_clifford(const WeylSystem& sys,
                                                                      const Matrix& u,
                                                                      double tol) {
    std::int64_t n = sys.order();
    Eigen::Index dim = sys.hilbert_dim();
    if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("operator dimension mismatch");

    GeneralizedCliffordWitness w;
    w.s_table.assign(n, -1);
    w.xi_table = Eigen::VectorXcd::Zero(n);
    for (std::int64_t i = 0; i < n; ++i) {
        Matrix b = u * sys.weyl(i) * u.adjoint();
        std::int64_t hit = -1;
        for (std::int64_t z = 0; z < n; ++z) {
            std::complex<double> coef = (sys.weyl(z).adjoint() * b).trace() / double(dim);
            if (std::abs(coef) > tol) {
                if (hit >= 0 || std::abs(std::abs(coef) - 1.0) > 1e-7) return std::nullopt;
                hit = z;
                w.xi_table(i) = coef / std::abs(coef);
            }
        }
        if (hit < 0) return std::nullopt;
        w.s_table[i] = hit;
    }

    // S must be an injective endomorphism with the twisted multiplicativity
    // xi(x)xi(y)sigma(Sx,Sy) = xi(x+y)sigma(x,y).
    const GroupSpec& spec = sys.spec();
    const Cocycle& c = sys.cocycle();
    std::vector<char> seen(n, 0);
    for (std::int64_t i = 0; i < n; ++i) {
        if (seen[w.s_table[i]]) return std::nullopt;
        seen[w.s_table[i]] = 1;
    }
    const auto& elems = sys.elements();
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            std::int64_t k = element_index(spec, add(spec, elems[i], elems[j]));
            if (w.s_table[k] !=
                element_index(spec, add(spec, elems[w.s_table[i]], elems[w.s_table[j]])))
                return std::nullopt;
            std::complex<double> lhs = w.xi_table(i) * w.xi_table(j) *
                                       c.eval(elems[w.s_table[i]], elems[w.s_table[j]]);
            std::complex<double> rhs = w.xi_table(k) * c.eval(elems[i], elems[j]);
            if (std::abs(lhs - rhs) > 1e-7) return std::nullopt;
        }
    return w;
}

std::optional<SymplecticMap> witness_matrix(const GroupSpec& spec,
                                            const GeneralizedCliffordWitness& w) {
    int m = 2 * spec.modes();
    SymplecticMap s;
    s.m.assign(m, std::vector<int>(m, 0));
    for (int j = 0; j < m; ++j) {
        GroupElement e = zero(spec);
        e.c[j] = 1;
        GroupElement img = element_at(spec, w.s_table[element_index(spec, e)]);
        for (int i = 0; i < m; ++i) s.m[i][j] = img.c[i];
    }
    auto elems = enumerate(spec);
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (element_index(spec, apply_map(spec, s, elems[i])) != w.s_table[i]) return std::nullopt;
    return s;
}

CliffordClass classify_clifford(const WeylSystem& sys, const GeneralizedCliffordWitness& w,
                                double tol) {
    const GroupSpec& spec = sys.spec();
    const Cocycle& c = sys.cocycle();
    auto s = witness_matrix(spec, w);
    bool symplectic = s && is_symplectic(c, *s);

    bool character = true;
    const auto& elems = sys.elements();
    std::int64_t n = sys.order();
    for (std::int64_t i = 0; i < n && character; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            std::int64_t k = element_index(spec, add(spec, elems[i], elems[j]));
            if (std::abs(w.xi_table(i) * w.xi_table(j) - w.xi_table(k)) > tol) {
                character = false;
                break;
            }
        }

    if (symplectic != character)
        throw std::runtime_error("Clifford classification subtests disagree");
    return symplectic ? CliffordClass::Plain : CliffordClass::GeneralizedOnly;
}

bool covariance_check(const WeylSystem& sys, const Matrix& rho, const GroupElement& y,
                      const SymplecticMap& s, const Matrix& u_s, double tol) {
    Matrix u = sys.weyl(y) * u_s;
    Matrix rho2 = u * rho * u.adjoint();
    PhaseFunction w1 = wigner(sys, rho);
    PhaseFunction w2 = wigner(sys, rho2);
    const GroupSpec& spec = sys.spec();
    for (std::int64_t i = 0; i < sys.order(); ++i) {
        GroupElement target = add(spec, apply_map(spec, s, sys.elements()[i]), y);
        if (std::abs(w1.values(i) - w2.values(element_index(spec, target))) > tol) return false;
    }
    return true;
}

bool covariance_check(const WeylSystem& sys, const Matrix& rho, const GroupElement& y,
                      const SymplecticMap& s, double tol) {
    Matrix u_s = realize_clifford(sys, zero(sys.spec()), s).unitary;
    return covariance_check(sys, rho, y, s, u_s, tol);
}

bool semidirect_check(const WeylSystem& sys, const GroupElement& y1, const SymplecticMap& s1,
                      const GroupElement& y2, const SymplecticMap& s2, double tol) {
    const GroupSpec& spec = sys.spec();
    CliffordElement a = realize_clifford(sys, y1, s1);
    CliffordElement b = realize_clifford(sys, y2, s2);
    GroupElement y = add(spec, y1, apply_map(spec, s1, y2));
    CliffordElement c = realize_clifford(sys, y, compose(spec, s1, s2));
    return equal_mod_phase(a.unitary * b.unitary, c.unitary, tol);
}

std::vector<Matrix> qubit_clifford_group() {
    using namespace std::complex_literals;
    double r = 1.0 / std::sqrt(2.0);
    Matrix h(2, 2), sg(2, 2);
    h << r, r, r, -r;
    sg << 1.0, 0.0, 0.0, 1i;
    std::vector<Matrix> gens = {h, sg};
    std::vector<Matrix> group = {phase_normalize(Matrix::Identity(2, 2))};
    std::size_t frontier = 0;
    while (frontier < group.size()) {
        if (group.size() > 10000) throw std::runtime_error("Clifford closure exceeded bound");
        Matrix g = group[frontier++];
        for (const Matrix& x : gens) {
            Matrix p = phase_normalize(g * x);
            bool known = false;
            for (const Matrix& q : group)
                if ((p - q).cwiseAbs().maxCoeff() < 1e-8) {
                    known = true;
                    break;
                }
            if (!known) group.push_back(p);
        }
    }
    return group;
}

}  // namespace twf
