#include "clif/composition.hpp"

#include <map>
#include <stdexcept>

namespace clif {

AlgKind parse_alg_kind(const std::string& name) {
    static const std::map<std::string, AlgKind> names = {
        {"C", AlgKind::C},           {"C'", AlgKind::Csplit},  {"C-split", AlgKind::Csplit},
        {"H", AlgKind::H},           {"H'", AlgKind::Hsplit},  {"H-split", AlgKind::Hsplit},
        {"O", AlgKind::O},           {"O'", AlgKind::Osplit},  {"O-split", AlgKind::Osplit},
    };
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown algebra: " + name);
    return it->second;
}

std::string alg_kind_name(AlgKind k) {
    switch (k) {
        case AlgKind::C: return "C";
        case AlgKind::Csplit: return "C-split";
        case AlgKind::H: return "H";
        case AlgKind::Hsplit: return "H-split";
        case AlgKind::O: return "O";
        case AlgKind::Osplit: return "O-split";
    }
    throw std::logic_error("bad kind");
}

std::string CompAlgebra::basis_name(int a) const {
    if (a == 0) return "I";
    switch (kind) {
        case AlgKind::C: return "i";
        case AlgKind::Csplit: return "e1";
        case AlgKind::H: return a == 1 ? "i" : a == 2 ? "j" : "k";
        case AlgKind::Hsplit: return a == 1 ? "i~" : a == 2 ? "j~" : "k~";
        case AlgKind::O: return "e" + std::to_string(a);
        case AlgKind::Osplit: return "e~" + std::to_string(a);
    }
    throw std::logic_error("bad kind");
}

Form octonion_three_form(bool split) {
    Form c;
    if (!split) {
        // C = e^{567} + e^5(e^{41}-e^{23}) + e^6(e^{42}-e^{31}) + e^7(e^{43}-e^{12})
        c += Form::monomial({5, 6, 7});
        c += Form::monomial({5, 4, 1}) - Form::monomial({5, 2, 3});
        c += Form::monomial({6, 4, 2}) - Form::monomial({6, 3, 1});
        c += Form::monomial({7, 4, 3}) - Form::monomial({7, 1, 2});
    } else {
        // C~ = e~^{123} - e~^1(e~^{45}-e~^{67}) - e~^2(e~^{46}-e~^{75}) - e~^3(e~^{47}-e~^{56})
        c += Form::monomial({1, 2, 3});
        c -= Form::monomial({1, 4, 5}) - Form::monomial({1, 6, 7});
        c -= Form::monomial({2, 4, 6}) - Form::monomial({2, 7, 5});
        c -= Form::monomial({3, 4, 7}) - Form::monomial({3, 5, 6});
    }
    return c;
}

namespace {

CompAlgebra build(AlgKind kind) {
    CompAlgebra alg;
    alg.kind = kind;
    alg.split = (kind == AlgKind::Csplit || kind == AlgKind::Hsplit || kind == AlgKind::Osplit);
    switch (kind) {
        case AlgKind::C:
        case AlgKind::Csplit: alg.dim = 2; break;
        case AlgKind::H:
        case AlgKind::Hsplit: alg.dim = 4; break;
        case AlgKind::O:
        case AlgKind::Osplit: alg.dim = 8; break;
    }
    int d = alg.dim;
    alg.norm_signature.assign(d, 1);
    alg.table.assign(d, std::vector<std::pair<int, int>>(d, {0, 0}));
    auto set = [&](int a, int b, int sign, int c) { alg.table[a][b] = {sign, c}; };
    // identity row/column
    for (int a = 0; a < d; ++a) {
        set(0, a, 1, a);
        set(a, 0, 1, a);
    }
    switch (kind) {
        case AlgKind::C:
            set(1, 1, -1, 0);
            break;
        case AlgKind::Csplit:
            set(1, 1, 1, 0);
            alg.norm_signature[1] = -1;
            break;
        case AlgKind::H:
            // i j = k and cyclic; squares -I
            set(1, 1, -1, 0); set(2, 2, -1, 0); set(3, 3, -1, 0);
            set(1, 2, 1, 3); set(2, 1, -1, 3);
            set(2, 3, 1, 1); set(3, 2, -1, 1);
            set(3, 1, 1, 2); set(1, 3, -1, 2);
            break;
        case AlgKind::Hsplit:
            // i~^2 = j~^2 = I, k~^2 = -I; i~ j~ = k~
            set(1, 1, 1, 0); set(2, 2, 1, 0); set(3, 3, -1, 0);
            set(1, 2, 1, 3); set(2, 1, -1, 3);
            set(2, 3, -1, 1); set(3, 2, 1, 1);
            set(3, 1, -1, 2); set(1, 3, 1, 2);
            alg.norm_signature[1] = -1;
            alg.norm_signature[2] = -1;
            break;
        case AlgKind::O:
        case AlgKind::Osplit: {
            bool split = (kind == AlgKind::Osplit);
            if (split)
                for (int a = 4; a <= 7; ++a) alg.norm_signature[a] = -1;
            Form c3 = octonion_three_form(split);
            // e_a e_b = -(e_a, e_b) I + e_a x e_b, with (x cross y)^c read
            // off by raising the last index of the 3-form with the norm form.
            for (int a = 1; a <= 7; ++a) {
                set(a, a, -alg.norm_signature[a], 0);
                for (int b = 1; b <= 7; ++b) {
                    if (a == b) continue;
                    int found = 0;
                    for (int cdx = 1; cdx <= 7; ++cdx) {
                        GaussRational comp = c3.coeff({a, b, cdx});
                        if (comp.is_zero()) continue;
                        if (found++) throw std::logic_error("three-form not decomposable per pair");
                        int sign = (comp == GaussRational(1)) ? 1 : -1;
                        set(a, b, sign * alg.norm_signature[cdx], cdx);
                    }
                    if (!found) throw std::logic_error("missing octonion product entry");
                }
            }
            break;
        }
    }
    return alg;
}

}  // namespace

const CompAlgebra& make_algebra(AlgKind kind) {
    static const CompAlgebra c = build(AlgKind::C);
    static const CompAlgebra cs = build(AlgKind::Csplit);
    static const CompAlgebra h = build(AlgKind::H);
    static const CompAlgebra hs = build(AlgKind::Hsplit);
    static const CompAlgebra o = build(AlgKind::O);
    static const CompAlgebra os = build(AlgKind::Osplit);
    switch (kind) {
        case AlgKind::C: return c;
        case AlgKind::Csplit: return cs;
        case AlgKind::H: return h;
        case AlgKind::Hsplit: return hs;
        case AlgKind::O: return o;
        case AlgKind::Osplit: return os;
    }
    throw std::logic_error("bad kind");
}

AlgElement AlgElement::zero(AlgKind k) {
    return AlgElement(k, std::vector<GaussRational>(make_algebra(k).dim));
}

AlgElement AlgElement::basis(AlgKind k, int index) {
    AlgElement x = zero(k);
    x.coords.at(index) = GaussRational(1);
    return x;
}

bool AlgElement::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

bool AlgElement::is_real() const {
    for (const auto& c : coords)
        if (!c.is_real()) return false;
    return true;
}

AlgElement AlgElement::operator-() const {
    AlgElement x = *this;
    for (auto& c : x.coords) c = -c;
    return x;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    if (kind != o.kind) throw std::invalid_argument("algebra mismatch");
    for (size_t a = 0; a < coords.size(); ++a) coords[a] += o.coords[a];
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    if (kind != o.kind) throw std::invalid_argument("algebra mismatch");
    for (size_t a = 0; a < coords.size(); ++a) coords[a] -= o.coords[a];
    return *this;
}

AlgElement& AlgElement::operator*=(const GaussRational& s) {
    for (auto& c : coords) c *= s;
    return *this;
}

std::string AlgElement::str() const {
    const CompAlgebra& alg = make_algebra(kind);
    std::string out;
    for (int a = 0; a < alg.dim; ++a) {
        if (coords[a].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(coords[a]) + ")*" + alg.basis_name(a);
    }
    return out.empty() ? "0" : out;
}

AlgElement mul(const AlgElement& x, const AlgElement& y) {
    if (x.kind != y.kind) throw std::invalid_argument("algebra mismatch");
    const CompAlgebra& alg = make_algebra(x.kind);
    AlgElement out = AlgElement::zero(x.kind);
    for (int a = 0; a < alg.dim; ++a) {
        if (x.coords[a].is_zero()) continue;
        for (int b = 0; b < alg.dim; ++b) {
            if (y.coords[b].is_zero()) continue;
            auto [sign, c] = alg.table[a][b];
            GaussRational v = x.coords[a] * y.coords[b];
            out.coords[c] += (sign > 0) ? v : -v;
        }
    }
    return out;
}

AlgElement conj(const AlgElement& x) {
    AlgElement out = x;
    for (size_t a = 1; a < out.coords.size(); ++a) out.coords[a] = -out.coords[a];
    return out;
}

GaussRational norm2(const AlgElement& x) {
    const CompAlgebra& alg = make_algebra(x.kind);
    GaussRational s;
    for (int a = 0; a < alg.dim; ++a) {
        GaussRational t = x.coords[a] * x.coords[a];
        if (alg.norm_signature[a] > 0)
            s += t;
        else
            s -= t;
    }
    return s;
}

GaussRational pairing(const AlgElement& x, const AlgElement& y) {
    if (x.kind != y.kind) throw std::invalid_argument("algebra mismatch");
    const CompAlgebra& alg = make_algebra(x.kind);
    GaussRational s;
    for (int a = 0; a < alg.dim; ++a) {
        GaussRational t = x.coords[a] * y.coords[a];
        if (alg.norm_signature[a] > 0)
            s += t;
        else
            s -= t;
    }
    return s;
}

bool is_null(const AlgElement& x) { return norm2(x).is_zero(); }

Matrix left_mult_matrix(const AlgElement& x) {
    const CompAlgebra& alg = make_algebra(x.kind);
    Matrix m(alg.dim, alg.dim);
    for (int b = 0; b < alg.dim; ++b) {
        AlgElement col = mul(x, AlgElement::basis(x.kind, b));
        m.set_col(b, col.coords);
    }
    return m;
}

Matrix right_mult_matrix(const AlgElement& x) {
    const CompAlgebra& alg = make_algebra(x.kind);
    Matrix m(alg.dim, alg.dim);
    for (int b = 0; b < alg.dim; ++b) {
        AlgElement col = mul(AlgElement::basis(x.kind, b), x);
        m.set_col(b, col.coords);
    }
    return m;
}

}  // namespace clif
