#pragma once

#include <optional>

#include "twf/transforms.hpp"

namespace twf {

/// Invertible 2n x 2n matrix over Z_d acting on group elements.
struct SymplecticMap {
    std::vector<std::vector<int>> m;

    bool operator==(const SymplecticMap& o) const { return m == o.m; }
    bool operator<(const SymplecticMap& o) const { return m < o.m; }
};

SymplecticMap identity_map(const GroupSpec& spec);
GroupElement apply_map(const GroupSpec& spec, const SymplecticMap& s, const GroupElement& x);
SymplecticMap compose(const GroupSpec& spec, const SymplecticMap& a, const SymplecticMap& b);

/// sigma(Sx,Sy) = sigma(x,y) on all pairs, by exact exponent comparison.
bool is_symplectic(const Cocycle& c, const SymplecticMap& s);

/// Table 1/2 membership criterion S^T B S = B over Z_d when the cocycle has
/// a bilinear form; nullopt otherwise.
std::optional<bool> symplectic_matrix_criterion(const Cocycle& c, const SymplecticMap& s);

struct SymplecticEnumeration {
    std::vector<SymplecticMap> maps;      // lexicographically ordered
    std::int64_t candidates = 0;          // full search space size
    bool criterion_consistent = true;     // matrix criterion == direct check everywhere
};

std::int64_t symplectic_search_budget();  // TW_MAX_SEARCH, default 2^24

/// Brute force over all d^{4n^2} matrices. Throws if over budget.
SymplecticEnumeration enumerate_symplectic(const Cocycle& c,
                                           std::int64_t budget = symplectic_search_budget());

struct CliffordElement {
    GroupElement y;
    SymplecticMap s;
    Matrix unitary;  // phase-normalized: first nonzero entry positive real
};

/// Normalize a matrix mod phase (first nonzero entry row-major positive real).
Matrix phase_normalize(const Matrix& m);
bool equal_mod_phase(const Matrix& a, const Matrix& b, double tol = 1e-8);

/// Unitary with U W(x) U^* = xi(x) W(s_table[x]) for a prescribed witness,
/// built by intertwiner averaging over a seeded random matrix.
Matrix realize_from_witness(const WeylSystem& sys, const std::vector<std::int64_t>& s_table,
                            const Eigen::VectorXcd& xi_table, std::uint64_t seed = 0);

/// Clifford operation W(y) U_S; requires S in Sp(G, sigma).
CliffordElement realize_clifford(const WeylSystem& sys, const GroupElement& y,
                                 const SymplecticMap& s, std::uint64_t seed = 0);

struct GeneralizedCliffordWitness {
    std::vector<std::int64_t> s_table;  // image index per element index
    Eigen::VectorXcd xi_table;
};

/// Expand U W(x) U^* in the basis {W(z)}; succeeds iff each expansion has a
/// single unit-modulus coefficient and the witness relations hold.
std::optional<GeneralizedCliffordWitness> detect_generalized_clifford(const WeylSystem& sys,
                                                                      const Matrix& u,
                                                                      double tol = 1e-9);

/// Matrix of the witness map S from images of the basis elements; nullopt if
/// the table is not the linear action of any matrix.
std::optional<SymplecticMap> witness_matrix(const GroupSpec& spec,
                                            const GeneralizedCliffordWitness& w);

enum class CliffordClass { Plain, GeneralizedOnly };

/// Plain iff S preserves sigma iff xi is a character; both subtests must
/// agree or this throws.
CliffordClass classify_clifford(const WeylSystem& sys, const GeneralizedCliffordWitness& w,
                                double tol = 1e-8);

/// W_rho(x) = W_{U rho U^*}(Sx + y) for all x.
bool covariance_check(const WeylSystem& sys, const Matrix& rho, const GroupElement& y,
                      const SymplecticMap& s, double tol = 1e-9);
/// Same, with a pre-realized U_S (so the y-loop can share it).
bool covariance_check(const WeylSystem& sys, const Matrix& rho, const GroupElement& y,
                      const SymplecticMap& s, const Matrix& u_s, double tol);

/// U_1 U_2 == realization of (y1 + S1 y2, S1 S2) mod phase.
bool semidirect_check(const WeylSystem& sys, const GroupElement& y1, const SymplecticMap& s1,
                      const GroupElement& y2, const SymplecticMap& s2, double tol = 1e-8);

/// Closure of {H, S-gate} mod phase; the single-qubit Clifford group.
std::vector<Matrix> qubit_clifford_group();

}  // namespace twf
