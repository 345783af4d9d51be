#include "twf/cocycle.hpp"

#include <functional>
#include <random>

namespace twf {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Multiplicative inverse of 2 mod odd d: (d+1)/2.
int inv2_mod(int d) { return (d + 1) / 2; }

std::vector<std::vector<int>> zero_matrix(int n) {
    return std::vector<std::vector<int>>(n, std::vector<int>(n, 0));
}

std::vector<std::vector<int>> l_matrix(int modes, int) {
    auto L = zero_matrix(2 * modes);
    for (int k = 0; k < modes; ++k) L[modes + k][k] = 1;
    return L;
}

}  // namespace

std::vector<std::vector<int>> delta_matrix(int modes) {
    auto D = zero_matrix(2 * modes);
    for (int i = 0; i < 2 * modes; ++i)
        for (int j = 0; j < i; ++j) D[i][j] = 1;
    return D;
}

std::vector<std::vector<int>> delta_eps_matrix(const SignTable& eps) {
    const int n = eps.modes();
    auto D = zero_matrix(2 * n);
    for (int j = 0; j < n; ++j) {
        D[2 * j + 1][2 * j] = 1;  // within-mode subdiagonal
        for (int i = 0; i < j; ++i) {
            const int et = (1 - eps(i, j)) / 2;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) D[2 * j + r][2 * i + c] = et;
        }
    }
    return D;
}

std::vector<std::vector<int>> delta_eps_reduction(const SignTable& eps) {
    const int n = eps.modes();
    auto P = zero_matrix(2 * n);
    for (int j = 0; j < n; ++j) {
        P[2 * j][2 * j] = P[2 * j + 1][2 * j + 1] = 1;
        for (int i = 0; i < j; ++i) {
            const int et = (1 - eps(i, j)) / 2;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) P[2 * i + r][2 * j + c] = et;
        }
    }
    return P;
}

Cocycle::Cocycle(GroupSpec spec, CocycleKind kind)
    : spec_(std::move(spec)), kind_(kind), root_order_(4 * spec_.d()) {}

Cocycle Cocycle::canonical(const GroupSpec& spec) {
    if (spec.kind() != SystemKind::FiniteWeyl)
        throw std::invalid_argument("canonical cocycle requires a finite Weyl spec");
    Cocycle c(spec, CocycleKind::Canonical);
    c.base_form_ = l_matrix(spec.modes(), spec.d());
    return c;
}

Cocycle Cocycle::canonical_normalized(const GroupSpec& spec) {
    if (spec.kind() != SystemKind::FiniteWeyl || spec.d() % 2 == 0)
        throw std::invalid_argument("canonical normalization requires odd d");
    Cocycle c(spec, CocycleKind::CanonicalNormalized);
    c.base_form_ = l_matrix(spec.modes(), spec.d());
    c.normalized_ = true;
    // xi(x,p) = omega^{2^{-1} x^T p}
    const int inv2 = inv2_mod(spec.d());
    const auto order = spec.order();
    c.xi_table_.resize(order);
    for (std::int64_t i = 0; i < order; ++i) {
        const GroupElement z = element_at(spec, i);
        int xp = 0;
        for (int k = 0; k < spec.modes(); ++k) xp = (xp + z.c[k] * z.c[spec.modes() + k]) % spec.d();
        c.xi_table_[i] = 4 * mod(inv2 * xp, spec.d());
    }
    return c;
}

Cocycle Cocycle::fermionic(const GroupSpec& spec) {
    if (spec.kind() != SystemKind::Fermionic)
        throw std::invalid_argument("fermionic cocycle requires a fermionic spec");
    Cocycle c(spec, CocycleKind::Fermionic);
    c.base_form_ = delta_matrix(spec.modes());
    return c;
}

Cocycle Cocycle::mixed_spin(const GroupSpec& spec) {
    if (spec.kind() != SystemKind::MixedSpin)
        throw std::invalid_argument("mixed-spin cocycle requires a mixed-spin spec");
    Cocycle c(spec, CocycleKind::MixedSpin);
    c.base_form_ = delta_eps_matrix(spec.eps());
    return c;
}

namespace {

// xi(x) = conj(principal sqrt of sigma(x,-x)): halve the argument taken in
// (-pi, pi], then negate. Exponents in units 2*pi/(4d).
std::vector<int> principal_xi_table(const GroupSpec& spec,
                                    const std::function<int(const GroupElement&, const GroupElement&)>& base4) {
    const auto order = spec.order();
    const int m = 4 * spec.d();
    std::vector<int> xi(order);
    for (std::int64_t i = 0; i < order; ++i) {
        const GroupElement x = element_at(spec, i);
        int e = mod(base4(x, neg(spec, x)), m);
        if (e > m / 2) e -= m;  // arg in (-pi, pi]
        if (e % 2 != 0) throw std::logic_error("sigma(x,-x) exponent not halvable");
        xi[i] = mod(-e / 2, m);
    }
    return xi;
}

}  // namespace

Cocycle Cocycle::fermionic_normalized(const GroupSpec& spec) {
    Cocycle c = fermionic(spec);
    c.kind_ = CocycleKind::FermionicNormalized;
    c.normalized_ = true;
    c.xi_table_ = principal_xi_table(
        spec, [&c](const GroupElement& x, const GroupElement& y) { return c.base_exp(x, y); });
    return c;
}

Cocycle Cocycle::mixed_spin_normalized(const GroupSpec& spec) {
    Cocycle c = mixed_spin(spec);
    c.kind_ = CocycleKind::MixedSpinNormalized;
    c.normalized_ = true;
    c.xi_table_ = principal_xi_table(
        spec, [&c](const GroupElement& x, const GroupElement& y) { return c.base_exp(x, y); });
    return c;
}

Cocycle Cocycle::trivial(const GroupSpec& spec) {
    Cocycle c(spec, CocycleKind::Trivial);
    c.base_form_ = zero_matrix(spec.dim());
    return c;
}

Cocycle Cocycle::standard(const GroupSpec& spec) {
    switch (spec.kind()) {
        case SystemKind::FiniteWeyl: return canonical(spec);
        case SystemKind::Fermionic: return fermionic(spec);
        case SystemKind::MixedSpin: return mixed_spin(spec);
    }
    throw std::logic_error("unreachable");
}

Cocycle Cocycle::standard_normalized(const GroupSpec& spec) {
    switch (spec.kind()) {
        case SystemKind::FiniteWeyl: return canonical_normalized(spec);
        case SystemKind::Fermionic: return fermionic_normalized(spec);
        case SystemKind::MixedSpin: return mixed_spin_normalized(spec);
    }
    throw std::logic_error("unreachable");
}

int Cocycle::base_exp(const GroupElement& x, const GroupElement& y) const {
    const int d = spec_.d();
    int s = 0;
    for (int i = 0; i < spec_.dim(); ++i) {
        if (x.c[i] == 0) continue;
        int row = 0;
        for (int j = 0; j < spec_.dim(); ++j) row += base_form_[i][j] * y.c[j];
        s = (s + x.c[i] * row) % d;
    }
    return 4 * s;
}

int Cocycle::eval_exp(const GroupElement& x, const GroupElement& y) const {
    int e = base_exp(x, y);
    if (normalized_) {
        e += xi_table_[element_index(spec_, x)];
        e += xi_table_[element_index(spec_, y)];
        e -= xi_table_[element_index(spec_, add(spec_, x, y))];
    }
    if (perturb_x_ >= 0 && element_index(spec_, x) == perturb_x_ &&
        element_index(spec_, y) == perturb_y_)
        e += perturb_delta_;
    return mod(e, root_order_);
}

std::complex<double> Cocycle::eval(const GroupElement& x, const GroupElement& y) const {
    return unit_phase(eval_exp(x, y), root_order_);
}

int Cocycle::xi_exp(const GroupElement& x) const {
    if (!normalized_) return 0;
    return xi_table_[element_index(spec_, x)];
}

std::complex<double> Cocycle::xi(const GroupElement& x) const {
    return unit_phase(xi_exp(x), root_order_);
}

int Cocycle::phi_exp(const GroupElement& x, const GroupElement& y) const {
    return mod(eval_exp(x, y) - eval_exp(y, x), root_order_);
}

std::complex<double> Cocycle::phi(const GroupElement& x, const GroupElement& y) const {
    return unit_phase(phi_exp(x, y), root_order_);
}

std::optional<std::vector<std::vector<int>>> Cocycle::bilinear_form() const {
    const int d = spec_.d();
    switch (kind_) {
        case CocycleKind::Canonical:
        case CocycleKind::Fermionic:
        case CocycleKind::MixedSpin:
        case CocycleKind::Trivial:
            return base_form_;
        case CocycleKind::CanonicalNormalized: {
            // sigma~ = omega^{-2^{-1} x^T J y}
            const int n = spec_.modes();
            const int inv2 = inv2_mod(d);
            auto B = zero_matrix(2 * n);
            for (int k = 0; k < n; ++k) {
                B[k][n + k] = mod(-inv2, d);
                B[n + k][k] = mod(inv2, d);
            }
            return B;
        }
        default:
            return std::nullopt;
    }
}

std::vector<std::vector<int>> Cocycle::phi_form() const {
    const int d = spec_.d();
    const int dim = spec_.dim();
    auto A = zero_matrix(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) A[i][j] = mod(base_form_[i][j] - base_form_[j][i], d);
    return A;
}

Cocycle Cocycle::perturb(const GroupElement& x, const GroupElement& y, int delta_exp) const {
    Cocycle c = *this;
    c.perturb_x_ = element_index(spec_, x);
    c.perturb_y_ = element_index(spec_, y);
    c.perturb_delta_ = delta_exp;
    return c;
}

Cocycle normalize(const Cocycle& c) {
    if (c.normalized()) return c;  // idempotent: xi == 1
    switch (c.kind()) {
        case CocycleKind::Canonical: return Cocycle::canonical_normalized(c.spec());
        case CocycleKind::Fermionic: return Cocycle::fermionic_normalized(c.spec());
        case CocycleKind::MixedSpin: return Cocycle::mixed_spin_normalized(c.spec());
        default:
            throw std::invalid_argument("no canonical normalization for this cocycle kind");
    }
}

bool verify_cocycle(const Cocycle& c, std::uint64_t seed) {
    const auto& spec = c.spec();
    const auto order = spec.order();
    const auto elems = enumerate(spec);
    const GroupElement o = zero(spec);
    for (const auto& x : elems) {
        if (c.eval_exp(x, o) != 0 || c.eval_exp(o, x) != 0) return false;
    }
    const int m = c.root_order();
    auto identity_holds = [&](const GroupElement& x, const GroupElement& y,
                              const GroupElement& z) {
        const GroupElement xy = add(spec, x, y);
        const GroupElement yz = add(spec, y, z);
        const int lhs = (c.eval_exp(x, y) + c.eval_exp(xy, z)) % m;
        const int rhs = (c.eval_exp(x, yz) + c.eval_exp(y, z)) % m;
        return lhs == rhs;
    };
    if (order <= 512) {
        for (const auto& x : elems)
            for (const auto& y : elems)
                for (const auto& z : elems)
                    if (!identity_holds(x, y, z)) return false;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> pick(0, order - 1);
        for (int t = 0; t < 200000; ++t) {
            if (!identity_holds(elems[pick(rng)], elems[pick(rng)], elems[pick(rng)]))
                return false;
        }
    }
    return true;
}

bool invertible_mod(const std::vector<std::vector<int>>& matrix, int d) {
    std::vector<int> primes;
    int r = d;
    for (int p = 2; p * p <= r; ++p) {
        if (r % p == 0) {
            primes.push_back(p);
            while (r % p == 0) r /= p;
        }
    }
    if (r > 1) primes.push_back(r);
    const int n = static_cast<int>(matrix.size());
    for (int p : primes) {
        auto a = matrix;
        for (auto& row : a)
            for (auto& v : row) v = ((v % p) + p) % p;
        // Gaussian elimination over Z_p.
        bool singular = false;
        for (int col = 0; col < n && !singular; ++col) {
            int piv = -1;
            for (int row = col; row < n; ++row)
                if (a[row][col] != 0) { piv = row; break; }
            if (piv < 0) { singular = true; break; }
            std::swap(a[col], a[piv]);
            int inv = 1;
            for (int k = 1; k < p; ++k)
                if (a[col][col] * k % p == 1) { inv = k; break; }
            for (int row = col + 1; row < n; ++row) {
                const int f = a[row][col] * inv % p;
                for (int j = col; j < n; ++j) a[row][j] = ((a[row][j] - f * a[col][j]) % p + p) % p;
            }
        }
        if (singular) return false;
    }
    return true;
}

bool is_heisenberg(const Cocycle& c) {
    return invertible_mod(c.phi_form(), c.spec().d());
}

}  // namespace twf
