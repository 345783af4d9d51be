#pragma once

#include <random>

#include "twf/random.hpp"
#include "twf/transforms.hpp"

namespace twf::testing {

inline WeylSystem make(SystemKind kind, int d, int modes, bool normalized) {
    GroupSpec spec = kind == SystemKind::FiniteWeyl  ? GroupSpec::finite_weyl(d, modes)
                     : kind == SystemKind::Fermionic ? GroupSpec::fermionic(modes)
                                                     : GroupSpec::mixed_spin(
                                                           SignTable::hardcore_boson(modes));
    return WeylSystem(spec, normalized ? Cocycle::standard_normalized(spec)
                                       : Cocycle::standard(spec));
}

inline GroupElement el(const GroupSpec& spec, std::vector<int> c) {
    GroupElement x;
    x.c = std::move(c);
    (void)element_index(spec, x);  // validates
    return x;
}

inline PhaseFunction random_function(std::int64_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    PhaseFunction f;
    f.values = Eigen::VectorXcd(n);
    for (std::int64_t i = 0; i < n; ++i) f.values(i) = std::complex<double>(g(rng), g(rng));
    return f;
}

inline double max_err(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace twf::testing
