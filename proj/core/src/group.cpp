#include "twf/group.hpp"

namespace twf {

SignTable::SignTable(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(entries_[i].size()) != n)
            throw std::invalid_argument("eps table must be square");
        if (entries_[i][i] != -1) throw std::invalid_argument("eps(i,i) must be -1");
        for (int j = 0; j < n; ++j) {
            if (entries_[i][j] != 1 && entries_[i][j] != -1)
                throw std::invalid_argument("eps entries must be +-1");
            if (entries_[i][j] != entries_[j][i])
                throw std::invalid_argument("eps must be symmetric");
        }
    }
}

SignTable SignTable::fermionic(int modes) {
    std::vector<std::vector<int>> e(modes, std::vector<int>(modes, -1));
    return SignTable(std::move(e));
}

SignTable SignTable::hardcore_boson(int modes) {
    std::vector<std::vector<int>> e(modes, std::vector<int>(modes, 1));
    for (int i = 0; i < modes; ++i) e[i][i] = -1;
    return SignTable(std::move(e));
}

GroupSpec GroupSpec::finite_weyl(int d, int modes) {
    if (d < 2 || d > 16) throw std::invalid_argument("finite Weyl base d must be in [2,16]");
    if (modes < 1) throw std::invalid_argument("modes must be >= 1");
    return GroupSpec(SystemKind::FiniteWeyl, d, modes);
}

GroupSpec GroupSpec::fermionic(int modes) {
    if (modes < 1) throw std::invalid_argument("modes must be >= 1");
    return GroupSpec(SystemKind::Fermionic, 2, modes);
}

GroupSpec GroupSpec::mixed_spin(const SignTable& eps) {
    if (eps.modes() < 1) throw std::invalid_argument("modes must be >= 1");
    GroupSpec spec(SystemKind::MixedSpin, 2, eps.modes());
    spec.eps_ = eps;
    return spec;
}

std::int64_t GroupSpec::order() const {
    std::int64_t v = 1;
    for (int i = 0; i < 2 * n_; ++i) v *= d_;
    return v;
}

std::int64_t GroupSpec::hilbert_dim() const {
    std::int64_t v = 1;
    for (int i = 0; i < n_; ++i) v *= d_;
    return v;
}

const SignTable& GroupSpec::eps() const {
    if (kind_ != SystemKind::MixedSpin)
        throw std::logic_error("eps table only defined for mixed spin systems");
    return eps_;
}

double GroupSpec::point_weight() const { return 1.0 / static_cast<double>(hilbert_dim()); }

bool GroupSpec::operator==(const GroupSpec& o) const {
    if (kind_ != o.kind_ || d_ != o.d_ || n_ != o.n_) return false;
    if (kind_ == SystemKind::MixedSpin) return eps_ == o.eps_;
    return true;
}

std::int64_t element_index(const GroupSpec& spec, const GroupElement& x) {
    std::int64_t idx = 0;
    std::int64_t stride = 1;
    for (int j = 0; j < spec.dim(); ++j) {
        idx += x.c[j] * stride;
        stride *= spec.d();
    }
    return idx;
}

GroupElement element_at(const GroupSpec& spec, std::int64_t idx) {
    GroupElement x;
    x.c.resize(spec.dim());
    for (int j = 0; j < spec.dim(); ++j) {
        x.c[j] = static_cast<int>(idx % spec.d());
        idx /= spec.d();
    }
    return x;
}

std::vector<GroupElement> enumerate(const GroupSpec& spec) {
    const std::int64_t order = spec.order();
    if (order > (std::int64_t{1} << 26))
        throw std::overflow_error("group order exceeds enumeration bound 2^26");
    std::vector<GroupElement> out;
    out.reserve(order);
    for (std::int64_t i = 0; i < order; ++i) out.push_back(element_at(spec, i));
    return out;
}

GroupElement add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
    if (x.c.size() != y.c.size() || static_cast<int>(x.c.size()) != spec.dim())
        throw std::invalid_argument("group element dimension mismatch");
    GroupElement z;
    z.c.resize(spec.dim());
    for (int j = 0; j < spec.dim(); ++j) z.c[j] = (x.c[j] + y.c[j]) % spec.d();
    return z;
}

GroupElement neg(const GroupSpec& spec, const GroupElement& x) {
    GroupElement z;
    z.c.resize(spec.dim());
    for (int j = 0; j < spec.dim(); ++j) z.c[j] = (spec.d() - x.c[j]) % spec.d();
    return z;
}

GroupElement zero(const GroupSpec& spec) {
    GroupElement z;
    z.c.assign(spec.dim(), 0);
    return z;
}

int character_exp(const GroupSpec& spec, const GroupElement& p, const GroupElement& x) {
    int s = 0;
    for (int j = 0; j < spec.dim(); ++j) s = (s + p.c[j] * x.c[j]) % spec.d();
    return s;
}

std::complex<double> character(const GroupSpec& spec, const GroupElement& p,
                               const GroupElement& x) {
    return unit_phase(character_exp(spec, p, x), spec.d());
}

}  // namespace twf
