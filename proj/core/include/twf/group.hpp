#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twf {

enum class SystemKind { FiniteWeyl, Fermionic, MixedSpin };

/// Sign table eps(i,j) for mixed spin systems: symmetric, eps(i,i) = -1.
class SignTable {
  public:
    SignTable() = default;
    explicit SignTable(std::vector<std::vector<int>> entries);

    /// All off-diagonal signs -1 (plain fermions).
    static SignTable fermionic(int modes);
    /// All off-diagonal signs +1 (hard-core bosons).
    static SignTable hardcore_boson(int modes);

    int operator()(int i, int j) const { return entries_[i][j]; }
    int modes() const { return static_cast<int>(entries_.size()); }
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    bool operator==(const SignTable& o) const { return entries_ == o.entries_; }

  private:
    std::vector<std::vector<int>> entries_;
};

/// A finite phase-space group Z_d^{2n}. The base d is 2 for fermionic and
/// mixed-spin systems.
class GroupSpec {
  public:
    static GroupSpec finite_weyl(int d, int modes);
    static GroupSpec fermionic(int modes);
    static GroupSpec mixed_spin(const SignTable& eps);

    SystemKind kind() const { return kind_; }
    int d() const { return d_; }
    int modes() const { return n_; }
    int dim() const { return 2 * n_; }        // length of coordinate vectors
    std::int64_t order() const;               // d^{2n}
    std::int64_t hilbert_dim() const;         // d^n
    const SignTable& eps() const;

    /// Haar weight of one point; mu = mu_hat = 1/d^n per point.
    double point_weight() const;

    bool operator==(const GroupSpec& o) const;

  private:
    GroupSpec(SystemKind k, int d, int n) : kind_(k), d_(d), n_(n) {}
    SystemKind kind_;
    int d_;
    int n_;
    SignTable eps_;
};

/// A point of the group: 2n residues mod d. Coordinate 0 varies fastest in
/// the canonical enumeration, matching the (00,10,01,11) tables for qubits.
struct GroupElement {
    std::vector<int> c;

    bool operator==(const GroupElement& o) const { return c == o.c; }
    bool operator!=(const GroupElement& o) const { return c != o.c; }
};

std::int64_t element_index(const GroupSpec& spec, const GroupElement& x);
GroupElement element_at(const GroupSpec& spec, std::int64_t idx);

/// All group elements in canonical index order. Refuses orders above 2^26.
std::vector<GroupElement> enumerate(const GroupSpec& spec);

GroupElement add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupSpec& spec, const GroupElement& x);
GroupElement zero(const GroupSpec& spec);

/// Dual pairing gamma_p(x) = omega^{x.p} with omega = exp(2 pi i / d).
std::complex<double> character(const GroupSpec& spec, const GroupElement& p,
                               const GroupElement& x);
/// Exponent of character(p)(x) as a multiple of 2 pi / d.
int character_exp(const GroupSpec& spec, const GroupElement& p, const GroupElement& x);

inline std::complex<double> unit_phase(int num, int den) {
    const double a = 2.0 * 3.14159265358979323846 * num / den;
    return {std::cos(a), std::sin(a)};
}

}  // namespace twf
