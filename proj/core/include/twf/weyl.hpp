#pragma once

#include <Eigen/Dense>

#include "twf/cocycle.hpp"
#include "twf/group.hpp"

namespace twf {

using Matrix = Eigen::MatrixXcd;

/// (eps-)Majorana operator c_j, 1 <= j <= 2n: Jordan-Wigner string with X
/// (odd j) or Y (even j) at mode ceil(j/2) and Z-type prefixes.
Matrix majorana(const GroupSpec& spec, int j);

/// The irreducible sigma-representation W on C^{d^n}, with all W(x) cached.
class WeylSystem {
  public:
    WeylSystem(GroupSpec spec, Cocycle cocycle);

    const GroupSpec& spec() const { return spec_; }
    const Cocycle& cocycle() const { return cocycle_; }
    Eigen::Index hilbert_dim() const { return hdim_; }
    double point_weight() const { return spec_.point_weight(); }
    std::int64_t order() const { return spec_.order(); }
    const std::vector<GroupElement>& elements() const { return elements_; }

    const Matrix& weyl(const GroupElement& x) const;
    const Matrix& weyl(std::int64_t idx) const { return cache_[idx]; }

    /// lambda_sigma(x) on C^{|G|}: lambda(x)f(y) = sigma(x,y-x)f(y-x).
    Matrix regular_rep(const GroupElement& x) const;

    /// Test hooks: swap or duplicate cached operators (break the representation).
    void corrupt_swap(std::int64_t a, std::int64_t b);
    void corrupt_duplicate(std::int64_t a, std::int64_t b);

  private:
    GroupSpec spec_;
    Cocycle cocycle_;
    Eigen::Index hdim_;
    std::vector<GroupElement> elements_;
    std::vector<Matrix> cache_;

    Matrix build(const GroupElement& x) const;
};

/// Max entrywise error of W(x)W(y) = sigma(x,y)W(x+y) over all pairs.
double projective_rep_error(const WeylSystem& sys);
bool verify_projective_rep(const WeylSystem& sys, double tol = 1e-10);

/// Full rank of the vectorized {W(x)}; for fermionic/mixed kinds also checks
/// pairwise trace orthogonality Tr(W(x)^* W(y)) = dim * delta_{xy}.
bool verify_irreducible_basis(const WeylSystem& sys, double tol = 1e-8);

/// Max error of the conjugation rule W(y)W(x)W(y)^* = Phi(y)(x) W(x).
double weyl_conjugation_error(const WeylSystem& sys);

}  // namespace twf
