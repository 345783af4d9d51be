#include <benchmark/benchmark.h>

#include <random>

#include "twf/gaussian.hpp"
#include "twf/random.hpp"
#include "twf/symmetry.hpp"

namespace {

twf::WeylSystem fermion(int n, bool normalized) {
    twf::GroupSpec spec = twf::GroupSpec::fermionic(n);
    return twf::WeylSystem(spec, normalized ? twf::Cocycle::fermionic_normalized(spec)
                                            : twf::Cocycle::fermionic(spec));
}

void bm_wigner(benchmark::State& state) {
    twf::WeylSystem sys = fermion(static_cast<int>(state.range(0)), true);
    std::mt19937_64 rng(1);
    twf::Matrix rho = twf::random_state(sys.hilbert_dim(), rng);
    for (auto _ : state) benchmark::DoNotOptimize(twf::wigner(sys, rho));
}
BENCHMARK(bm_wigner)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void bm_fourier_roundtrip(benchmark::State& state) {
    twf::WeylSystem sys = fermion(static_cast<int>(state.range(0)), false);
    std::mt19937_64 rng(2);
    twf::Matrix rho = twf::random_state(sys.hilbert_dim(), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(twf::twisted_fourier(sys, twf::char_function(sys, rho)));
}
BENCHMARK(bm_fourier_roundtrip)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void bm_symplectic_enumeration(benchmark::State& state) {
    twf::GroupSpec spec = state.range(0) == 0 ? twf::GroupSpec::fermionic(2)
                                              : twf::GroupSpec::finite_weyl(3, 1);
    twf::Cocycle c = state.range(0) == 0 ? twf::Cocycle::fermionic(spec)
                                         : twf::Cocycle::canonical_normalized(spec);
    for (auto _ : state) benchmark::DoNotOptimize(twf::enumerate_symplectic(c));
}
BENCHMARK(bm_symplectic_enumeration)->Arg(0)->Arg(1);

void bm_pfaffian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            a(i, j) = g(rng);
            a(j, i) = -a(i, j);
        }
    for (auto _ : state) benchmark::DoNotOptimize(twf::pfaffian(a));
}
BENCHMARK(bm_pfaffian)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void bm_gaussian_state(benchmark::State& state) {
    twf::WeylSystem sys = fermion(static_cast<int>(state.range(0)), false);
    std::vector<double> a(state.range(0), 0.5);
    Eigen::MatrixXd m = twf::block_diag_covariance(a);
    for (auto _ : state) benchmark::DoNotOptimize(twf::gaussian_from_covariance(sys, m));
}
BENCHMARK(bm_gaussian_state)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
