#pragma once

#include <optional>

#include "twf/group.hpp"

namespace twf {

enum class CocycleKind {
    Canonical,             // sigma_can((x,p),(x',p')) = omega^{p.x'}
    CanonicalNormalized,   // odd d only; omega^{-2^{-1} x^T J y}
    Fermionic,             // (-1)^{x^T Delta y}
    FermionicNormalized,
    MixedSpin,             // (-1)^{x^T Delta_eps y}
    MixedSpinNormalized,
    Trivial,               // sigma == 1; not a Heisenberg multiplier (test use)
};

/// Strictly lower triangular Delta with all subdiagonal entries 1.
std::vector<std::vector<int>> delta_matrix(int modes);
/// Delta_eps built from eps_tilde(i,j) = (1-eps(i,j))/2 in 2x2 blocks.
std::vector<std::vector<int>> delta_eps_matrix(const SignTable& eps);
/// The block upper-triangular P with P^T (Delta_eps + Delta_eps^T) P = direct
/// sum of Omega blocks over Z_2.
std::vector<std::vector<int>> delta_eps_reduction(const SignTable& eps);

/// A 2-cocycle on the group. All values are roots of unity of order dividing
/// 4d; evaluations are exact integer exponents in units of 2*pi/(4d), so
/// equality tests in the group searches need no tolerance.
class Cocycle {
  public:
    static Cocycle canonical(const GroupSpec& spec);
    static Cocycle canonical_normalized(const GroupSpec& spec);  // requires odd d
    static Cocycle fermionic(const GroupSpec& spec);
    static Cocycle fermionic_normalized(const GroupSpec& spec);
    static Cocycle mixed_spin(const GroupSpec& spec);
    static Cocycle mixed_spin_normalized(const GroupSpec& spec);
    static Cocycle trivial(const GroupSpec& spec);

    /// Natural unnormalized cocycle for the system kind.
    static Cocycle standard(const GroupSpec& spec);
    /// Natural normalized cocycle (canonical normalization).
    static Cocycle standard_normalized(const GroupSpec& spec);

    const GroupSpec& spec() const { return spec_; }
    CocycleKind kind() const { return kind_; }
    bool normalized() const { return normalized_; }
    /// Order of the root-of-unity lattice all values live on (4d).
    int root_order() const { return root_order_; }

    /// sigma(x,y) as an exponent, multiple of 2*pi/root_order().
    int eval_exp(const GroupElement& x, const GroupElement& y) const;
    std::complex<double> eval(const GroupElement& x, const GroupElement& y) const;

    /// Normalization factor xi(x); identically 1 for unnormalized kinds.
    int xi_exp(const GroupElement& x) const;
    std::complex<double> xi(const GroupElement& x) const;

    /// Phi(x)(y) = sigma(x,y) conj(sigma(y,x)); always a d-th root of unity.
    int phi_exp(const GroupElement& x, const GroupElement& y) const;
    std::complex<double> phi(const GroupElement& x, const GroupElement& y) const;

    /// Bilinear exponent matrix B over Z_d with sigma(x,y) = omega^{x^T B y},
    /// when the kind admits one (all kinds except the normalized fermionic
    /// and mixed-spin ones).
    std::optional<std::vector<std::vector<int>>> bilinear_form() const;

    /// Matrix A over Z_d with Phi(x)(y) = omega^{x^T A y}.
    std::vector<std::vector<int>> phi_form() const;

    /// Copy with sigma perturbed at one argument pair (breaks the axioms;
    /// test hook for the verifier).
    Cocycle perturb(const GroupElement& x, const GroupElement& y, int delta_exp) const;

  private:
    Cocycle(GroupSpec spec, CocycleKind kind);

    GroupSpec spec_;
    CocycleKind kind_;
    bool normalized_ = false;
    int root_order_;
    // Base bilinear form (units of omega = exp(2 pi i/d)); present for every
    // kind's unnormalized part.
    std::vector<std::vector<int>> base_form_;
    // xi exponents per element index, units 2*pi/(4d); empty if unnormalized.
    std::vector<int> xi_table_;
    // Optional single-point perturbation (pair of element indices, exponent).
    std::int64_t perturb_x_ = -1, perturb_y_ = -1;
    int perturb_delta_ = 0;

    int base_exp(const GroupElement& x, const GroupElement& y) const;
};

/// normalize(c): canonical normalization of an unnormalized cocycle.
Cocycle normalize(const Cocycle& c);

/// Cocycle identity + unitality; exhaustive for |G| <= 512, sampled above.
bool verify_cocycle(const Cocycle& c, std::uint64_t seed = 0);

/// True iff x -> Phi(x) is a bijection onto the dual group, i.e. the matrix
/// of Phi is invertible over Z_d.
bool is_heisenberg(const Cocycle& c);

/// Invertibility of a square matrix over Z_d (unit determinant mod every
/// prime factor of d).
bool invertible_mod(const std::vector<std::vector<int>>& m, int d);

}  // namespace twf
