#include <cstdio>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "twf/anglenum.hpp"
#include "twf/json_io.hpp"
#include "twf/positivity.hpp"
#include "twf/random.hpp"
#include "twf/symmetry.hpp"

namespace {

// Exit codes: 1 failed invariant, 2 invalid state/input, 3 dimension
// mismatch, 4 search-space refusal.
constexpr int kExitInvariant = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDimension = 3;
constexpr int kExitRefusal = 4;

struct SystemOpts {
    std::string system = "fermion";
    int d = 2;
    int modes = 1;
    bool normalized = false;
    std::string eps_file;
};

void add_system_flags(CLI::App* cmd, SystemOpts& o) {
    cmd->add_option("--system", o.system, "weyl|fermion|mixed")
        ->check(CLI::IsMember({"weyl", "fermion", "mixed"}));
    cmd->add_option("--d", o.d, "base dimension (weyl systems)");
    cmd->add_option("--modes", o.modes, "number of modes");
    cmd->add_flag("--normalized", o.normalized, "use the normalized cocycle");
    cmd->add_option("--eps", o.eps_file, "sign table JSON (mixed systems)");
}

twf::GroupSpec make_spec(const SystemOpts& o) {
    if (o.system == "weyl") return twf::GroupSpec::finite_weyl(o.d, o.modes);
    if (o.system == "fermion") return twf::GroupSpec::fermionic(o.modes);
    if (o.eps_file.empty())
        throw CLI::ValidationError("--eps", "mixed systems need a sign table file");
    Eigen::MatrixXd e = twf::real_matrix_from_json(twf::read_file(o.eps_file));
    std::vector<std::vector<int>> entries(e.rows(), std::vector<int>(e.cols()));
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j) entries[i][j] = static_cast<int>(e(i, j));
    return twf::GroupSpec::mixed_spin(twf::SignTable(entries));
}

twf::WeylSystem make_system(const SystemOpts& o) {
    twf::GroupSpec spec = make_spec(o);
    return twf::WeylSystem(spec, o.normalized ? twf::Cocycle::standard_normalized(spec)
                                              : twf::Cocycle::standard(spec));
}

twf::Matrix load_state(const twf::WeylSystem& sys, const std::string& path) {
    twf::Matrix rho;
    try {
        rho = twf::matrix_from_json(twf::read_file(path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitInvalid);
    }
    if (rho.rows() != sys.hilbert_dim() || rho.cols() != sys.hilbert_dim()) {
        std::cerr << "error: state is " << rho.rows() << "x" << rho.cols()
                  << " but the system needs " << sys.hilbert_dim() << "x" << sys.hilbert_dim()
                  << "\n";
        std::exit(kExitDimension);
    }
    if (!twf::is_valid_state(rho)) {
        std::cerr << "error: matrix is not a density operator\n";
        std::exit(kExitInvalid);
    }
    return rho;
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::cout << content;
    else
        twf::write_file(out, content);
}

int run_verify(const SystemOpts& o, bool inject_error, std::uint64_t seed) {
    twf::GroupSpec spec = make_spec(o);
    if (spec.order() > 4096) {
        std::cerr << "refused: |G| > 4096\n";
        return kExitRefusal;
    }
    twf::WeylSystem sys = make_system(o);
    if (inject_error) sys.corrupt_swap(1, 2);

    std::mt19937_64 rng(seed);
    bool all = true;
    auto report = [&](const char* name, bool ok) {
        std::printf("%-24s %s\n", name, ok ? "pass" : "FAIL");
        all = all && ok;
    };
    report("cocycle-axioms", twf::verify_cocycle(sys.cocycle(), seed));
    report("heisenberg-multiplier", twf::is_heisenberg(sys.cocycle()));
    report("projective-relation", twf::verify_projective_rep(sys, 1e-10));
    report("irreducible-basis", twf::verify_irreducible_basis(sys));
    report("fourier-intertwiner", twf::intertwiner_check(sys));

    bool roundtrip = true;
    for (int t = 0; t < 10 && roundtrip; ++t) {
        twf::Matrix rho = twf::random_state(sys.hilbert_dim(), rng);
        twf::Matrix back = twf::twisted_fourier(sys, twf::char_function(sys, rho));
        roundtrip = (rho - back).cwiseAbs().maxCoeff() < 1e-10;
    }
    report("fourier-roundtrip", roundtrip);

    if (sys.cocycle().normalized()) {
        bool expect = true;
        for (int t = 0; t < 10 && expect; ++t) {
            twf::Matrix rho = twf::random_state(sys.hilbert_dim(), rng);
            twf::Matrix a = twf::random_hermitian(sys.hilbert_dim(), rng);
            auto pair = twf::expectation_identity(sys, rho, a);
            expect = std::abs(pair.quantum - pair.classical) < 1e-9;
        }
        report("expectation-identity", expect);
    }

    {
        twf::Matrix rho = twf::random_state(sys.hilbert_dim(), rng);
        twf::GroupElement y = twf::element_at(spec, 1 % spec.order());
        report("translation-covariance",
               twf::covariance_check(sys, rho, y, twf::identity_map(spec)));
    }
    return all ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted Fourier analysis on finite phase-space groups"};
    app.require_subcommand(1);
    std::string out;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    app.add_option("--out", out, "output file (default stdout)");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--tol", tol, "tolerance override");

    SystemOpts sys_opts;

    auto* c_wigner = app.add_subcommand("wigner", "characteristic and Wigner tables of a state");
    std::string state_file, format = "csv";
    add_system_flags(c_wigner, sys_opts);
    c_wigner->add_option("--state", state_file, "state matrix JSON")->required();
    c_wigner->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* c_char = app.add_subcommand("char", "characteristic function table of a state");
    add_system_flags(c_char, sys_opts);
    c_char->add_option("--state", state_file, "state matrix JSON")->required();
    c_char->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* c_sym = app.add_subcommand("symmetry", "enumerate the symplectic group");
    bool realize = false;
    add_system_flags(c_sym, sys_opts);
    c_sym->add_flag("--realize", realize, "also realize a Clifford unitary per map");

    auto* c_detect = app.add_subcommand("clifford-detect", "witness extraction for a unitary");
    std::string unitary_file;
    add_system_flags(c_detect, sys_opts);
    c_detect->add_option("--unitary", unitary_file, "unitary matrix JSON")->required();

    auto* c_gauss = app.add_subcommand("gaussian", "build a Gaussian state from a covariance");
    std::string cov_file;
    std::vector<double> block;
    add_system_flags(c_gauss, sys_opts);
    c_gauss->add_option("--cov", cov_file, "covariance matrix JSON");
    c_gauss->add_option("--block-diagonal", block, "block coefficients a1,a2,...")->delimiter(',');

    auto* c_pos = app.add_subcommand("positivity", "Wigner nonnegativity classifiers");
    auto* c_pos_check = c_pos->add_subcommand("check", "classify one state or covariance");
    add_system_flags(c_pos_check, sys_opts);
    std::string pos_state;
    std::vector<double> pos_block;
    c_pos_check->add_option("--state", pos_state, "state matrix JSON");
    c_pos_check->add_option("--block-diagonal", pos_block, "Gaussian block coefficients")
        ->delimiter(',');
    c_pos->require_subcommand(1);

    auto* c_ang = app.add_subcommand("anglenum", "angle-number (T x Z) system");
    auto* c_ang_w = c_ang->add_subcommand("wigner", "Mukunda Wigner grid of a torus state");
    std::string coeffs_file;
    int band = 1, grid = 0;
    c_ang_w->add_option("--coeffs", coeffs_file, "Fourier coefficients JSON (2M+1 pairs)")
        ->required();
    c_ang_w->add_option("--band", band, "band limit M")->required();
    c_ang_w->add_option("--grid", grid, "angle grid size (default 4M+4)");
    auto* c_ang_c = c_ang->add_subcommand("check", "cocycle preservation of S(theta,n)");
    double alpha = 0.0;
    int am = 1, ak = 1;
    bool anorm = false;
    c_ang_c->add_option("--alpha", alpha, "shear parameter in [0,1)");
    c_ang_c->add_option("--m", am, "angle sign (+-1)");
    c_ang_c->add_option("--k", ak, "number sign (+-1)");
    c_ang_c->add_flag("--normalized", anorm, "use the normalized cocycle");
    c_ang->require_subcommand(1);

    auto* c_verify = app.add_subcommand("verify", "run the invariant suite for a system");
    bool inject = false;
    add_system_flags(c_verify, sys_opts);
    c_verify->add_flag("--inject-error", inject, "corrupt one operator (must then fail)");

    for (auto* sc : app.get_subcommands(nullptr)) {
        sc->fallthrough(true);
        for (auto* nested : sc->get_subcommands(nullptr)) nested->fallthrough(true);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_wigner || *c_char) {
            twf::WeylSystem sys = make_system(sys_opts);
            twf::Matrix rho = load_state(sys, state_file);
            twf::PhaseFunction f =
                *c_char ? twf::char_function(sys, rho) : twf::wigner(sys, rho);
            emit(out, format == "json" ? twf::phase_function_to_json(sys.spec(), f)
                                       : twf::phase_function_to_csv(sys.spec(), f));
            if (*c_wigner) {
                double sum = f.values.real().sum() * sys.point_weight();
                double min = f.values.real().minCoeff();
                std::fprintf(stderr, "sum %.12g min %.12g\n", sum, min);
            }
            return 0;
        }
        if (*c_sym) {
            twf::GroupSpec spec = make_spec(sys_opts);
            twf::Cocycle c = sys_opts.normalized ? twf::Cocycle::standard_normalized(spec)
                                                 : twf::Cocycle::standard(spec);
            twf::SymplecticEnumeration e;
            try {
                e = twf::enumerate_symplectic(c);
            } catch (const std::runtime_error& err) {
                std::cerr << "refused: " << err.what() << "\n";
                return kExitRefusal;
            }
            if (!e.criterion_consistent) {
                std::cerr << "matrix criterion disagrees with direct check\n";
                return kExitInvariant;
            }
            std::cout << "order " << e.maps.size() << "\n";
            for (const auto& s : e.maps) {
                for (const auto& row : s.m) {
                    for (std::size_t j = 0; j < row.size(); ++j)
                        std::cout << row[j] << (j + 1 < row.size() ? " " : "");
                    std::cout << "; ";
                }
                std::cout << "\n";
            }
            if (realize) {
                twf::WeylSystem sys(spec, c);
                for (const auto& s : e.maps) {
                    auto el = twf::realize_clifford(sys, twf::zero(spec), s, seed);
                    std::cout << twf::matrix_to_json(el.unitary) << "\n";
                }
            }
            return 0;
        }
        if (*c_detect) {
            twf::WeylSystem sys = make_system(sys_opts);
            twf::Matrix u = twf::matrix_from_json(twf::read_file(unitary_file));
            if (u.rows() != sys.hilbert_dim() || u.cols() != sys.hilbert_dim()) {
                std::cerr << "error: unitary dimension mismatch\n";
                return kExitDimension;
            }
            auto w = twf::detect_generalized_clifford(sys, u, tol);
            if (!w) {
                std::cout << "not a generalized Clifford operation\n";
                return 0;
            }
            auto cls = twf::classify_clifford(sys, *w);
            std::cout << (cls == twf::CliffordClass::Plain ? "plain" : "generalized-only") << "\n";
            for (std::int64_t i = 0; i < sys.order(); ++i) {
                const auto& x = sys.elements()[i];
                const auto& sx = sys.elements()[w->s_table[i]];
                for (int v : x.c) std::cout << v;
                std::cout << " -> ";
                for (int v : sx.c) std::cout << v;
                std::cout << "  xi " << w->xi_table(i).real() << (w->xi_table(i).imag() < 0 ? "-" : "+")
                          << std::abs(w->xi_table(i).imag()) << "i\n";
            }
            return 0;
        }
        if (*c_gauss) {
            twf::WeylSystem sys = make_system(sys_opts);
            Eigen::MatrixXd m;
            if (!block.empty())
                m = twf::block_diag_covariance(block);
            else if (!cov_file.empty())
                m = twf::real_matrix_from_json(twf::read_file(cov_file));
            else {
                std::cerr << "error: need --cov or --block-diagonal\n";
                return kExitInvalid;
            }
            if (m.rows() != sys.spec().dim()) {
                std::cerr << "error: covariance dimension mismatch\n";
                return kExitDimension;
            }
            twf::Matrix rho = twf::gaussian_from_covariance(sys, m);
            emit(out, twf::matrix_to_json(rho) + "\n");
            Eigen::MatrixXd back = twf::covariance_of(sys.spec(), rho);
            std::fprintf(stderr, "covariance roundtrip error %.3g\n",
                         (back - m).cwiseAbs().maxCoeff());
            return 0;
        }
        if (*c_pos) {
            twf::WeylSystem sys = make_system(sys_opts);
            twf::PositivityVerdict v;
            if (!pos_block.empty()) {
                v = sys_opts.normalized
                        ? twf::gaussian_normalized(sys, pos_block, tol)
                        : twf::gaussian_unnormalized(sys, twf::block_diag_covariance(pos_block),
                                                     tol);
            } else if (!pos_state.empty()) {
                twf::Matrix rho = load_state(sys, pos_state);
                if (sys.spec().modes() == 1)
                    v = sys_opts.normalized ? twf::onemode_normalized(rho, tol)
                                            : twf::onemode_unnormalized(rho, tol);
                else if (sys.spec().modes() == 2 && !sys_opts.normalized)
                    v = twf::twomode_unnormalized(rho, tol);
                else
                    v = twf::oracle_verdict(sys, rho, tol);
            } else {
                std::cerr << "error: need --state or --block-diagonal\n";
                return kExitInvalid;
            }
            std::cout << "{\"nonneg\": " << (v.nonneg ? "true" : "false");
            if (v.form_mismatch) std::cout << ", \"form_mismatch\": true";
            if (v.witness_point) {
                std::cout << ", \"witness\": [";
                for (std::size_t i = 0; i < v.witness_point->c.size(); ++i)
                    std::cout << (i ? "," : "") << v.witness_point->c[i];
                std::cout << "]";
            }
            std::cout << "}\n";
            return 0;
        }
        if (*c_ang) {
            if (*c_ang_w) {
                twf::Matrix raw = twf::matrix_from_json(twf::read_file(coeffs_file));
                Eigen::VectorXcd coeffs(raw.size());
                for (Eigen::Index i = 0; i < raw.size(); ++i) coeffs(i) = raw(i);
                if (grid == 0) grid = 4 * band + 4;
                twf::TorusState psi = twf::make_torus_state(band, coeffs, grid);
                twf::AngleNumberWigner w = twf::mukunda_wigner(psi);
                std::ostringstream csv;
                csv.precision(17);
                csv << "theta";
                for (int n = -2 * band; n <= 2 * band; ++n) csv << ",n" << n;
                csv << "\n";
                for (int k = 0; k < grid; ++k) {
                    csv << static_cast<double>(k) / grid;
                    for (int col = 0; col <= 4 * band; ++col) csv << "," << w.values(k, col);
                    csv << "\n";
                }
                emit(out, csv.str());
                std::fprintf(stderr, "total %.12g\n", twf::wigner_total(w));
            } else {
                bool ok = twf::check_toruszz_automorphism(alpha, am, ak, anorm);
                std::cout << (ok ? "preserved" : "not preserved") << "\n";
            }
            return 0;
        }
        if (*c_verify) return run_verify(sys_opts, inject, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}
