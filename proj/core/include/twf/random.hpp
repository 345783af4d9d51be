#pragma once

#include <random>

#include "twf/weyl.hpp"

namespace twf {

inline Matrix random_ginibre(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
    return a;
}

/// Wishart-style mixed state A A^* / Tr(A A^*).
inline Matrix random_state(Eigen::Index dim, std::mt19937_64& rng) {
    Matrix a = random_ginibre(dim, rng);
    Matrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

inline Eigen::VectorXcd random_pure(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = std::complex<double>(g(rng), g(rng));
    return v / v.norm();
}

inline Matrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
    Matrix a = random_ginibre(dim, rng);
    return (a + a.adjoint()) / 2.0;
}

}  // namespace twf
