#include "clif/form.hpp"

#include <algorithm>
#include <stdexcept>

#include "clif/polyform.hpp"  // merge_sign, popcount_mask

namespace clif {

Form Form::monomial(const std::vector<int>& labels, const GaussRational& c) {
    Form f;
    uint8_t mask = 0;
    int inversions = 0;
    for (size_t k = 0; k < labels.size(); ++k) {
        int l = labels[k];
        if (l < 0 || l > 7) throw std::invalid_argument("form label out of range");
        if (mask & (1u << l)) return f;  // repeated label: zero
        for (size_t j = 0; j < k; ++j)
            if (labels[j] > l) ++inversions;
        mask |= static_cast<uint8_t>(1u << l);
    }
    f.set_coeff(mask, (inversions % 2 == 0) ? c : -c);
    return f;
}

Form Form::scalar(const GaussRational& c) {
    Form f;
    f.set_coeff(0, c);
    return f;
}

const GaussRational& Form::coeff(uint8_t mask) const {
    static const GaussRational zero;
    auto it = terms_.find(mask);
    return it == terms_.end() ? zero : it->second;
}

GaussRational Form::coeff(const std::vector<int>& labels) const {
    uint8_t mask = 0;
    int inversions = 0;
    for (size_t k = 0; k < labels.size(); ++k) {
        if (mask & (1u << labels[k])) return GaussRational();
        for (size_t j = 0; j < k; ++j)
            if (labels[j] > labels[k]) ++inversions;
        mask |= static_cast<uint8_t>(1u << labels[k]);
    }
    GaussRational c = coeff(mask);
    return (inversions % 2 == 0) ? c : -c;
}

void Form::set_coeff(uint8_t mask, const GaussRational& c) {
    if (c.is_zero())
        terms_.erase(mask);
    else
        terms_[mask] = c;
}

Form Form::degree_part(int k) const {
    Form f;
    for (const auto& [mask, c] : terms_)
        if (popcount_mask(mask) == k) f.terms_[mask] = c;
    return f;
}

Form Form::real_part() const {
    Form f;
    for (const auto& [mask, c] : terms_)
        if (c.re != 0) f.terms_[mask] = GaussRational(c.re);
    return f;
}

Form Form::imag_part() const {
    Form f;
    for (const auto& [mask, c] : terms_)
        if (c.im != 0) f.terms_[mask] = GaussRational(c.im);
    return f;
}

Form Form::conj_coeffs() const {
    Form f;
    for (const auto& [mask, c] : terms_) f.terms_[mask] = c.conj();
    return f;
}

Form Form::operator-() const {
    Form f;
    for (const auto& [mask, c] : terms_) f.terms_[mask] = -c;
    return f;
}

Form& Form::operator+=(const Form& o) {
    for (const auto& [mask, c] : o.terms_) set_coeff(mask, coeff(mask) + c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    for (const auto& [mask, c] : o.terms_) set_coeff(mask, coeff(mask) - c);
    return *this;
}

Form& Form::operator*=(const GaussRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mask, c] : terms_) c *= s;
    return *this;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mask, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (mask != 0) {
            out += "*e^";
            for (int i = 0; i < 8; ++i)
                if (mask & (1u << i)) out += std::to_string(i);
        }
    }
    return out;
}

Form wedge(const Form& a, const Form& b) {
    Form out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            GaussRational c = ca * cb;
            if (merge_sign(ma, mb) < 0) c = -c;
            uint8_t m = static_cast<uint8_t>(ma | mb);
            out.set_coeff(m, out.coeff(m) + c);
        }
    return out;
}

Form contract(const std::vector<GaussRational>& cov, const Form& t) {
    if (cov.size() > 8) throw std::invalid_argument("covector too long");
    Form out;
    for (const auto& [mask, c] : t.terms())
        for (size_t i = 0; i < cov.size(); ++i) {
            uint8_t bit = static_cast<uint8_t>(1u << i);
            if (!(mask & bit) || cov[i].is_zero()) continue;
            int pos = popcount_mask(static_cast<uint8_t>(mask & (bit - 1)));
            GaussRational v = cov[i] * c;
            if (pos % 2) v = -v;
            uint8_t rest = static_cast<uint8_t>(mask & ~bit);
            out.set_coeff(rest, out.coeff(rest) + v);
        }
    return out;
}

Form hodge_star(const Form& t, uint8_t labels, const std::function<int(int)>& metric) {
    Form out;
    for (const auto& [mask, c] : t.terms()) {
        if (mask & ~labels) throw std::invalid_argument("form term outside the star's index set");
        uint8_t comp = static_cast<uint8_t>(labels & ~mask);
        GaussRational v = c;
        if (merge_sign(mask, comp) < 0) v = -v;
        for (int i = 0; i < 8; ++i)
            if ((mask & (1u << i)) && metric(i) < 0) v = -v;
        out.set_coeff(comp, out.coeff(comp) + v);
    }
    return out;
}

}  // namespace clif
