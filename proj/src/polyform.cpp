#include "clif/polyform.hpp"

#include <bit>
#include <stdexcept>

#include "clif/matrix.hpp"

namespace clif {

int popcount_mask(uint8_t m) { return std::popcount(static_cast<unsigned>(m)); }

int merge_sign(uint8_t a, uint8_t b) {
    // Count pairs (i in a, j in b) with i > j: each is one transposition
    // when sorting the concatenation (a ascending, then b ascending).
    int inversions = 0;
    for (int i = 0; i < 8; ++i) {
        if (!(a & (1u << i))) continue;
        inversions += popcount_mask(static_cast<uint8_t>(b & ((1u << i) - 1)));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

Polyform::Polyform(int n) : n_(n) {
    if (n < 1 || n > 4) throw std::invalid_argument("polyform generator count out of range");
}

Polyform Polyform::scalar(int n, const GaussRational& c) {
    Polyform p(n);
    p.set_coeff(0, c);
    return p;
}

Polyform Polyform::monomial(int n, const std::vector<int>& indices, const GaussRational& c) {
    Polyform p(n);
    uint8_t mask = 0;
    int prev = 0;
    for (int i : indices) {
        if (i <= prev || i > n) throw std::invalid_argument("monomial indices must be increasing and in range");
        mask |= static_cast<uint8_t>(1u << (i - 1));
        prev = i;
    }
    p.set_coeff(mask, c);
    return p;
}

const GaussRational& Polyform::coeff(uint8_t mask) const {
    static const GaussRational zero;
    auto it = terms_.find(mask);
    return it == terms_.end() ? zero : it->second;
}

void Polyform::set_coeff(uint8_t mask, const GaussRational& c) {
    if (mask >= (1u << n_)) throw std::invalid_argument("monomial outside algebra");
    if (c.is_zero())
        terms_.erase(mask);
    else
        terms_[mask] = c;
}

Polyform Polyform::degree_part(int k) const {
    Polyform p(n_);
    for (const auto& [mask, c] : terms_)
        if (popcount_mask(mask) == k) p.terms_[mask] = c;
    return p;
}

int Polyform::max_degree() const {
    int d = 0;
    for (const auto& [mask, c] : terms_) d = std::max(d, popcount_mask(mask));
    return d;
}

Polyform Polyform::operator-() const {
    Polyform p(n_);
    for (const auto& [mask, c] : terms_) p.terms_[mask] = -c;
    return p;
}

Polyform& Polyform::operator+=(const Polyform& o) {
    if (n_ != o.n_) throw std::invalid_argument("polyform generator mismatch");
    for (const auto& [mask, c] : o.terms_) set_coeff(mask, coeff(mask) + c);
    return *this;
}

Polyform& Polyform::operator-=(const Polyform& o) {
    if (n_ != o.n_) throw std::invalid_argument("polyform generator mismatch");
    for (const auto& [mask, c] : o.terms_) set_coeff(mask, coeff(mask) - c);
    return *this;
}

Polyform& Polyform::operator*=(const GaussRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mask, c] : terms_) c *= s;
    return *this;
}

std::string Polyform::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mask, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (mask != 0) {
            out += "*e";
            for (int i = 0; i < n_; ++i)
                if (mask & (1u << i)) out += std::to_string(i + 1);
        }
    }
    return out;
}

Polyform wedge(const Polyform& a, const Polyform& b) {
    if (a.generators() != b.generators()) throw std::invalid_argument("polyform generator mismatch");
    Polyform out(a.generators());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            GaussRational c = ca * cb;
            if (merge_sign(ma, mb) < 0) c = -c;
            out.set_coeff(static_cast<uint8_t>(ma | mb), out.coeff(static_cast<uint8_t>(ma | mb)) + c);
        }
    return out;
}

Polyform create(int i, const Polyform& p) {
    return wedge(Polyform::monomial(p.generators(), {i}), p);
}

Polyform annihilate(int i, const Polyform& p) {
    if (i < 1 || i > p.generators()) throw std::invalid_argument("generator index out of range");
    uint8_t bit = static_cast<uint8_t>(1u << (i - 1));
    Polyform out(p.generators());
    for (const auto& [mask, c] : p.terms()) {
        if (!(mask & bit)) continue;
        int pos = popcount_mask(static_cast<uint8_t>(mask & (bit - 1)));
        GaussRational v = (pos % 2 == 0) ? c : -c;
        uint8_t rest = static_cast<uint8_t>(mask & ~bit);
        out.set_coeff(rest, out.coeff(rest) + v);
    }
    return out;
}

Polyform reverse(const Polyform& p) {
    Polyform out(p.generators());
    for (const auto& [mask, c] : p.terms()) {
        int k = popcount_mask(mask);
        bool flip = (k * (k - 1) / 2) % 2 != 0;
        out.set_coeff(mask, flip ? -c : c);
    }
    return out;
}

Polyform conj_coeffs(const Polyform& p) {
    Polyform out(p.generators());
    for (const auto& [mask, c] : p.terms()) out.set_coeff(mask, c.conj());
    return out;
}

GaussRational top_pairing(const Polyform& a, const Polyform& b) {
    uint8_t top = static_cast<uint8_t>((1u << a.generators()) - 1);
    return wedge(reverse(a), b).coeff(top);
}

std::vector<GaussRational> coords_in_basis(const Polyform& p,
                                           const std::vector<Polyform>& basis) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    int n = basis[0].generators();
    size_t dim = 1u << n;
    Matrix m(dim, basis.size());
    for (size_t j = 0; j < basis.size(); ++j)
        for (uint8_t mask = 0; mask < dim; ++mask) m(mask, j) = basis[j].coeff(mask);
    std::vector<GaussRational> rhs(dim);
    for (uint8_t mask = 0; mask < dim; ++mask) rhs[mask] = p.coeff(mask);
    auto x = solve(m, rhs);
    if (!x) throw std::domain_error("polyform outside the span of the basis");
    return *x;
}

}  // namespace clif
