// Acceptance gate: every released property of the library, each printed as a
// single PASS/FAIL line. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "twf/anglenum.hpp"
#include "twf/positivity.hpp"
#include "twf/random.hpp"
#include "twf/symmetry.hpp"

using namespace twf;

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

struct Criterion {
    std::string name;
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.str().empty()) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& what) {
        if (ok && detail.str().empty()) detail << what;
    }
};

std::vector<WeylSystem> raw_systems() {
    std::vector<WeylSystem> out;
    for (auto [d, n] : {std::pair{2, 1}, {3, 1}, {5, 1}, {3, 2}}) {
        GroupSpec s = GroupSpec::finite_weyl(d, n);
        out.emplace_back(s, Cocycle::canonical(s));
    }
    for (int n : {1, 2, 3}) {
        GroupSpec s = GroupSpec::fermionic(n);
        out.emplace_back(s, Cocycle::fermionic(s));
    }
    // Two mixed-spin sign conventions at n = 2: all commuting, all anticommuting.
    GroupSpec hb = GroupSpec::mixed_spin(SignTable::hardcore_boson(2));
    out.emplace_back(hb, Cocycle::mixed_spin(hb));
    GroupSpec mf = GroupSpec::mixed_spin(SignTable::fermionic(2));
    out.emplace_back(mf, Cocycle::mixed_spin(mf));
    return out;
}

std::vector<WeylSystem> normalized_systems() {
    std::vector<WeylSystem> out;
    for (auto [d, n] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
        GroupSpec s = GroupSpec::finite_weyl(d, n);
        out.emplace_back(s, Cocycle::canonical_normalized(s));
    }
    for (int n : {1, 2, 3}) {
        GroupSpec s = GroupSpec::fermionic(n);
        out.emplace_back(s, Cocycle::fermionic_normalized(s));
    }
    GroupSpec hb = GroupSpec::mixed_spin(SignTable::hardcore_boson(2));
    out.emplace_back(hb, Cocycle::mixed_spin_normalized(hb));
    return out;
}

PhaseFunction random_function(std::int64_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    PhaseFunction f;
    f.values = Eigen::VectorXcd(n);
    for (std::int64_t i = 0; i < n; ++i) f.values(i) = std::complex<double>(g(rng), g(rng));
    return f;
}

void c1_projective(Criterion& c) {
    double t0 = now_seconds();
    double worst = 0.0;
    for (const WeylSystem& sys : raw_systems()) worst = std::max(worst, projective_rep_error(sys));
    double dt = now_seconds() - t0;
    c.require(worst < 1e-12, "max error " + std::to_string(worst));
    c.require(dt < 30.0, "runtime " + std::to_string(dt) + " s");
    std::ostringstream s;
    s.precision(2);
    s << std::scientific << "max err " << worst << ", " << std::fixed << dt << " s";
    c.note(s.str());
}

void c2_plancherel(Criterion& c) {
    std::mt19937_64 rng(211);
    double worst = 0.0;
    for (const WeylSystem& sys : raw_systems()) {
        const double mu = sys.point_weight();
        for (int t = 0; t < 100; ++t) {
            PhaseFunction f = random_function(sys.order(), rng);
            PhaseFunction g = random_function(sys.order(), rng);
            std::complex<double> lhs =
                (g.values.conjugate().cwiseProduct(f.values)).sum() * mu;
            std::complex<double> rhs = (twisted_fourier(sys, f) * twisted_fourier(sys, g).adjoint())
                                           .trace();
            worst = std::max(worst, std::abs(lhs - rhs));
            // Plain Plancherel for the phase-space transform: it is a mu-unitary.
            PhaseFunction ff = symplectic_fourier(sys, f);
            PhaseFunction gg = symplectic_fourier(sys, g);
            std::complex<double> rhs2 =
                (gg.values.conjugate().cwiseProduct(ff.values)).sum() * mu;
            worst = std::max(worst, std::abs(lhs - rhs2));
        }
    }
    c.require(worst < 1e-10, "max error " + std::to_string(worst));
}

void c3_roundtrip(Criterion& c) {
    std::mt19937_64 rng(223);
    double worst = 0.0;
    for (const WeylSystem& sys : raw_systems()) {
        for (int t = 0; t < 100; ++t) {
            Matrix rho = random_state(sys.hilbert_dim(), rng);
            Matrix back = twisted_fourier(sys, char_function(sys, rho));
            worst = std::max(worst, (back - rho).cwiseAbs().maxCoeff());
        }
    }
    c.require(worst < 1e-10, "max error " + std::to_string(worst));
}

void c4_expectation(Criterion& c) {
    std::mt19937_64 rng(227);
    double worst = 0.0;
    for (const WeylSystem& sys : normalized_systems()) {
        for (int t = 0; t < 100; ++t) {
            Matrix rho = random_state(sys.hilbert_dim(), rng);
            Matrix obs = random_hermitian(sys.hilbert_dim(), rng);
            ExpectationPair p = expectation_identity(sys, rho, obs);
            worst = std::max(worst, std::abs(p.quantum - p.classical));
        }
    }
    c.require(worst < 1e-9, "max error " + std::to_string(worst));
}

struct SymConfig {
    WeylSystem sys;
    SymplecticEnumeration en;
};

std::vector<SymConfig>& sym_configs() {
    static std::vector<SymConfig> cfgs = [] {
        std::vector<SymConfig> out;
        GroupSpec f1 = GroupSpec::fermionic(1);
        GroupSpec f2 = GroupSpec::fermionic(2);
        GroupSpec w3 = GroupSpec::finite_weyl(3, 1);
        for (Cocycle c : {Cocycle::fermionic(f1), Cocycle::fermionic_normalized(f1),
                          Cocycle::fermionic(f2), Cocycle::canonical_normalized(w3)}) {
            out.push_back({WeylSystem(c.spec(), c), enumerate_symplectic(c)});
        }
        return out;
    }();
    return cfgs;
}

void c5_symplectic_orders(Criterion& c) {
    double t0 = now_seconds();
    const std::vector<SymConfig>& cfg = sym_configs();
    std::vector<std::size_t> want = {1, 3, 3, 24};
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        c.require(cfg[i].en.maps.size() == want[i],
                  "config " + std::to_string(i) + " order " +
                      std::to_string(cfg[i].en.maps.size()));
        c.require(cfg[i].en.criterion_consistent,
                  "config " + std::to_string(i) + " matrix criterion disagrees");
    }
    auto contains = [](const SymplecticEnumeration& e, const SymplecticMap& s) {
        return std::find(e.maps.begin(), e.maps.end(), s) != e.maps.end();
    };
    c.require(contains(cfg[1].en, SymplecticMap{{{0, 1}, {1, 1}}}), "missing 2x2 generator");
    c.require(contains(cfg[2].en, SymplecticMap{{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 0},
                                                 {0, 1, 0, 1}}}),
              "missing 4x4 generator");
    double dt = now_seconds() - t0;
    c.require(dt < 120.0, "runtime " + std::to_string(dt) + " s");
}

void c6_covariance(Criterion& c) {
    std::mt19937_64 rng(229);
    int checks = 0;
    for (const SymConfig& cfg : sym_configs()) {
        const WeylSystem& sys = cfg.sys;
        for (const SymplecticMap& s : cfg.en.maps) {
            Matrix u_s = realize_clifford(sys, zero(sys.spec()), s).unitary;
            for (const GroupElement& y : sys.elements()) {
                for (int t = 0; t < 20; ++t) {
                    Matrix rho = random_state(sys.hilbert_dim(), rng);
                    if (!covariance_check(sys, rho, y, s, u_s, 1e-9)) {
                        c.require(false, "covariance failed");
                        return;
                    }
                    ++checks;
                }
            }
        }
    }
    c.note(std::to_string(checks) + " checks");
}

void c7_clifford_detection(Criterion& c) {
    GroupSpec f1 = GroupSpec::fermionic(1);
    WeylSystem raw(f1, Cocycle::fermionic(f1));
    WeylSystem nor(f1, Cocycle::fermionic_normalized(f1));
    std::vector<Matrix> group = qubit_clifford_group();
    c.require(group.size() == 24, "closure size " + std::to_string(group.size()));

    std::set<std::vector<std::int64_t>> raw_tables, nor_tables;
    for (const Matrix& u : group) {
        auto wr = detect_generalized_clifford(raw, u);
        auto wn = detect_generalized_clifford(nor, u);
        c.require(wr.has_value() && wn.has_value(), "element not detected");
        if (wr) raw_tables.insert(wr->s_table);
        if (wn) nor_tables.insert(wn->s_table);
    }
    c.require(raw_tables == nor_tables, "witness sets differ between the two cocycles");

    Matrix t_gate = Matrix::Identity(2, 2);
    t_gate(1, 1) = std::polar(1.0, M_PI / 4);
    c.require(!detect_generalized_clifford(raw, t_gate).has_value(), "T accepted (raw)");
    c.require(!detect_generalized_clifford(nor, t_gate).has_value(), "T accepted (normalized)");

    Matrix xy(2, 2);  // (X + Y)/sqrt(2): the canonical coordinate-swap witness
    xy << 0.0, std::complex<double>(1, -1) / std::sqrt(2.0),
        std::complex<double>(1, 1) / std::sqrt(2.0), 0.0;
    GroupElement e11;
    e11.c = {1, 1};
    for (WeylSystem* sys : {&raw, &nor}) {
        auto w = detect_generalized_clifford(*sys, xy);
        if (!w) {
            c.require(false, "swap witness not detected");
            continue;
        }
        auto s = witness_matrix(sys->spec(), *w);
        c.require(s.has_value() && s->m == std::vector<std::vector<int>>{{0, 1}, {1, 0}},
                  "witness map is not the swap");
        std::complex<double> xi11 = w->xi_table(element_index(sys->spec(), e11));
        c.require(std::abs(xi11 - std::complex<double>(-1, 0)) < 1e-8, "xi(11) != -1");
        c.require(classify_clifford(*sys, *w) == CliffordClass::GeneralizedOnly,
                  "swap witness not classified GeneralizedOnly");
    }
}

void c8_positivity_classifiers(Criterion& c) {
    std::mt19937_64 rng(233);
    GroupSpec f1 = GroupSpec::fermionic(1);
    WeylSystem raw(f1, Cocycle::fermionic(f1));
    WeylSystem nor(f1, Cocycle::fermionic_normalized(f1));
    int mismatch = 0;
    for (int t = 0; t < 10000; ++t) {
        Matrix rho = random_state(2, rng);
        if (onemode_unnormalized(rho).nonneg != is_wigner_nonneg(raw, rho, 1e-9)) ++mismatch;
        if (onemode_normalized(rho).nonneg != is_wigner_nonneg(nor, rho, 1e-9)) ++mismatch;
    }
    c.require(mismatch == 0, std::to_string(mismatch) + " one-mode mismatches");

    GroupSpec f2 = GroupSpec::fermionic(2);
    WeylSystem raw2(f2, Cocycle::fermionic(f2));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int done = 0, mismatch2 = 0;
    while (done < 1000) {
        std::array<double, 5> a;
        for (double& v : a) v = u(rng);
        Matrix rho = twomode_form_state(a);
        if (!is_valid_state(rho)) continue;
        ++done;
        if (twomode_unnormalized(rho).nonneg != is_wigner_nonneg(raw2, rho, 1e-9)) ++mismatch2;
    }
    c.require(mismatch2 == 0, std::to_string(mismatch2) + " two-mode mismatches");

    // Pure boundary states: b on the axes at radius 1/2.
    for (std::complex<double> b :
         {std::complex<double>(0.5, 0), {-0.5, 0}, {0, 0.5}, {0, -0.5}}) {
        Matrix rho(2, 2);
        rho << 0.5, b, std::conj(b), 0.5;
        c.require(std::abs((rho * rho).trace().real() - 1.0) < 1e-12, "boundary state not pure");
        c.require(onemode_unnormalized(rho).nonneg, "boundary state rejected (closed form)");
        c.require(is_wigner_nonneg(raw, rho, 1e-9), "boundary state rejected (oracle)");
    }

    int pure_nonneg = 0;
    for (int t = 0; t < 1000; ++t) {
        Eigen::VectorXcd psi = random_pure(4, rng);
        if (is_wigner_nonneg(raw2, psi * psi.adjoint(), 1e-9)) ++pure_nonneg;
    }
    c.require(pure_nonneg == 0, std::to_string(pure_nonneg) + " nonneg pure two-mode states");
}

void c9_gaussian_positivity(Criterion& c) {
    std::mt19937_64 rng(239);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n : {1, 2, 3}) {
        GroupSpec spec = GroupSpec::fermionic(n);
        WeylSystem raw(spec, Cocycle::fermionic(spec));
        WeylSystem nor(spec, Cocycle::fermionic_normalized(spec));
        c.require(is_wigner_nonneg(raw, gaussian_from_covariance(
                                            raw, Eigen::MatrixXd::Zero(2 * n, 2 * n)), 1e-9),
                  "maximally mixed rejected");
        for (int t = 0; t < 200; ++t) {
            std::vector<double> a(n);
            for (double& v : a) v = u(rng);
            Eigen::MatrixXd m = block_diag_covariance(a);
            Matrix rho_raw = gaussian_from_covariance(raw, m);
            bool raw_ok = is_wigner_nonneg(raw, rho_raw, 1e-9);
            c.require(raw_ok == (m.cwiseAbs().maxCoeff() == 0.0), "nonzero covariance nonneg");
            c.require(gaussian_unnormalized(raw, m).nonneg == raw_ok,
                      "unnormalized classifier disagrees");

            Matrix rho_nor = gaussian_from_covariance(nor, m);
            bool nor_ok = is_wigner_nonneg(nor, rho_nor, 1e-9);
            double prod = 1.0;
            for (double v : a) prod *= std::abs(v) + 1.0;
            if (prod <= 2.0) c.require(nor_ok, "product bound violated");
            if (raw_ok) c.require(nor_ok, "monotonicity violated");
        }
    }
    // a = (1, 1): strictly negative at the origin under the normalized cocycle.
    GroupSpec f2 = GroupSpec::fermionic(2);
    WeylSystem nor2(f2, Cocycle::fermionic_normalized(f2));
    PhaseFunction w = wigner(nor2, gaussian_from_covariance(nor2, block_diag_covariance({1, 1})));
    c.require(w.values(0).real() < -1e-6, "a=(1,1) not negative at the origin");
}

void c10_wick(Criterion& c) {
    std::mt19937_64 rng(241);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::normal_distribution<double> g(0.0, 1.0);
    double worst = 0.0;
    for (int n : {1, 2}) {
        GroupSpec spec = GroupSpec::fermionic(n);
        WeylSystem sys(spec, Cocycle::fermionic(spec));
        std::vector<Matrix> cs;
        for (int j = 1; j <= 2 * n; ++j) cs.push_back(majorana(spec, j));
        for (int t = 0; t < 50; ++t) {
            std::vector<double> a(n);
            for (double& v : a) v = u(rng);
            Eigen::MatrixXd m = block_diag_covariance(a);
            if (n > 1) {  // rotate into a generic antisymmetric covariance
                Eigen::MatrixXd r(2 * n, 2 * n);
                for (int i = 0; i < r.size(); ++i) r(i) = g(rng);
                Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(r).householderQ();
                m = q * m * q.transpose();
            }
            Matrix rho = gaussian_from_covariance(sys, m);
            for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
                if (__builtin_popcount(mask) % 2 != 0) continue;
                std::vector<int> idx;
                Matrix prod = Matrix::Identity(sys.hilbert_dim(), sys.hilbert_dim());
                for (int j = 1; j <= 2 * n; ++j) {
                    if (mask & (1 << (j - 1))) {
                        idx.push_back(j);
                        prod = prod * cs[j - 1];
                    }
                }
                std::complex<double> dense = (rho * prod).trace();
                worst = std::max(worst, std::abs(dense - wick_moment(m, idx)));
            }
        }
    }
    c.require(worst < 1e-8, "max moment error " + std::to_string(worst));

    double worst_rel = 0.0;
    for (int t = 0; t < 100; ++t) {
        int sz = 2 * (1 + static_cast<int>(rng() % 4));  // 2, 4, 6, 8
        Eigen::MatrixXd a(sz, sz);
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < i; ++j) {
                a(i, j) = g(rng);
                a(j, i) = -a(i, j);
            }
        a.diagonal().setZero();
        double pf = pfaffian(a);
        double det = a.determinant();
        worst_rel = std::max(worst_rel, std::abs(pf * pf - det) / std::max(1.0, std::abs(det)));
    }
    c.require(worst_rel < 1e-8, "pf^2 vs det error " + std::to_string(worst_rel));
}

void c11_anglenum(Criterion& c) {
    for (int m : {-2, 0, 1}) {
        Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(5);
        coeffs(m + 2) = 1.0;
        AngleNumberWigner w = mukunda_wigner(make_torus_state(2, coeffs, 16));
        for (int col = 0; col < w.values.cols(); ++col) {
            double expect = (col - 4 == m) ? 1.0 : 0.0;
            for (int row = 0; row < w.values.rows(); ++row)
                if (std::abs(w.values(row, col) - expect) > 1e-12)
                    c.require(false, "delta profile broken at m=" + std::to_string(m));
        }
    }

    std::mt19937_64 rng(251);
    std::normal_distribution<double> g(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        Eigen::VectorXcd coeffs(17);
        for (int i = 0; i < 17; ++i) coeffs(i) = std::complex<double>(g(rng), g(rng));
        coeffs /= coeffs.norm();
        TorusState psi = make_torus_state(8, coeffs, 40);
        worst = std::max(worst, std::abs(wigner_total(mukunda_wigner(psi)) - 1.0));
    }
    c.require(worst < 1e-8, "normalization error " + std::to_string(worst));

    for (double alpha : {0.0, 0.25, 0.5}) {
        for (int m : {-1, 1}) {
            for (int k : {-1, 1}) {
                bool raw_want = alpha == 0.0 && m == k;          // {+id, -id}
                bool nor_want = alpha == 0.0 && m == 1 && k == 1;  // identity only
                if (check_toruszz_automorphism(alpha, m, k, false) != raw_want ||
                    check_toruszz_automorphism(alpha, m, k, true) != nor_want)
                    c.require(false, "verdict wrong at alpha=" + std::to_string(alpha) +
                                         " m=" + std::to_string(m) + " k=" + std::to_string(k));
            }
        }
    }
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        void (*run)(Criterion&);
    };
    const Entry entries[] = {
        {"01 projective representation identity", c1_projective},
        {"02 twisted and plain Plancherel", c2_plancherel},
        {"03 Fourier round trip", c3_roundtrip},
        {"04 expectation identity", c4_expectation},
        {"05 symplectic group orders", c5_symplectic_orders},
        {"06 Clifford covariance", c6_covariance},
        {"07 generalized Clifford detection", c7_clifford_detection},
        {"08 positivity classifiers vs oracle", c8_positivity_classifiers},
        {"09 Gaussian positivity", c9_gaussian_positivity},
        {"10 Wick moments and Pfaffian", c10_wick},
        {"11 angle-number Wigner", c11_anglenum},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        Criterion c;
        c.name = e.name;
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.require(false, std::string("exception: ") + ex.what());
        }
        std::string detail = c.detail.str();
        std::printf("[%s] %s%s%s\n", c.ok ? "PASS" : "FAIL", e.name,
                    detail.empty() ? "" : " — ", detail.c_str());
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
    std::printf("%d/11 criteria passed\n", 11 - failures);
    return failures;
}
