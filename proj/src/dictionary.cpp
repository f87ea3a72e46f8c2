#include "clif/dictionary.hpp"

#include <stdexcept>

namespace clif {

std::vector<GaussRational> realify_vec(const std::vector<GaussRational>& v) {
    std::vector<GaussRational> out(2 * v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        out[2 * i] = GaussRational(v[i].re);
        out[2 * i + 1] = GaussRational(v[i].im);
    }
    return out;
}

std::vector<GaussRational> complexify_vec(const std::vector<GaussRational>& v) {
    if (v.size() % 2) throw std::invalid_argument("odd realified length");
    std::vector<GaussRational> out(v.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        if (!v[2 * i].is_real() || !v[2 * i + 1].is_real())
            throw std::invalid_argument("realified coordinates must be real");
        out[i] = GaussRational(v[2 * i].re, v[2 * i + 1].re);
    }
    return out;
}

Matrix realify_linear(const Matrix& m) {
    Matrix out(2 * m.rows(), 2 * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            out(2 * i, 2 * j) = GaussRational(m(i, j).re);
            out(2 * i, 2 * j + 1) = GaussRational(-m(i, j).im);
            out(2 * i + 1, 2 * j) = GaussRational(m(i, j).im);
            out(2 * i + 1, 2 * j + 1) = GaussRational(m(i, j).re);
        }
    return out;
}

Matrix realify_antilinear(const Matrix& m) {
    Matrix out(2 * m.rows(), 2 * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            out(2 * i, 2 * j) = GaussRational(m(i, j).re);
            out(2 * i, 2 * j + 1) = GaussRational(m(i, j).im);
            out(2 * i + 1, 2 * j) = GaussRational(m(i, j).im);
            out(2 * i + 1, 2 * j + 1) = GaussRational(-m(i, j).re);
        }
    return out;
}

std::vector<AlgElement> Dictionary::to_algebra(const std::vector<GaussRational>& half) const {
    std::vector<GaussRational> coords =
        realified ? forward.apply(realify_vec(half)) : forward.apply(half);
    int d = make_algebra(algebra).dim;
    if (coords.size() % d) throw std::logic_error("dictionary size mismatch");
    std::vector<AlgElement> out;
    for (size_t k = 0; k < coords.size(); k += d)
        out.push_back(AlgElement(
            algebra, std::vector<GaussRational>(coords.begin() + k, coords.begin() + k + d)));
    return out;
}

namespace {

Matrix exact_inverse(const Matrix& m) {
    auto inv = inverse(m);
    if (!inv) throw std::logic_error("dictionary forward matrix is singular");
    return *inv;
}

// Forward matrix of the C^2 -> quaternion map in interleaved coordinates
// (Re u1, Im u1, Re u2, Im u2) -> (q0, q1, q2, q3), where
// u1 = (q0 - i q3)/2 and u2 = (q1 + sgn2 * i q2)/2.
Matrix c2_quat_forward(int sgn2) {
    Matrix f(4, 4);
    f(0, 0) = GaussRational(2);   // q0 = 2 Re u1
    f(1, 2) = GaussRational(2);   // q1 = 2 Re u2
    f(2, 3) = GaussRational(2 * sgn2);  // q2 = +/- 2 Im u2
    f(3, 1) = GaussRational(-2);  // q3 = -2 Im u1
    return f;
}

Matrix conj_twist_quat() {
    Matrix t(4, 4);
    t(0, 0) = GaussRational(1);
    t(1, 1) = GaussRational(1);
    t(2, 2) = GaussRational(-1);
    t(3, 3) = GaussRational(-1);
    return t;
}

// Columns of vector_forward for the euclidean quaternion assignment:
// Gamma_1 -> -j, Gamma_2 -> i, Gamma_3 -> k, Gamma_4 -> I.
Matrix vector_forward_h() {
    Matrix v(4, 4);
    v(2, 0) = GaussRational(-1);
    v(1, 1) = GaussRational(1);
    v(3, 2) = GaussRational(1);
    v(0, 3) = GaussRational(1);
    return v;
}

// Split assignment: Gamma_I -> i~, j~, k~ for I = 1,2,3 and Gamma_4 -> I.
Matrix vector_forward_hsplit() {
    Matrix v(4, 4);
    v(1, 0) = GaussRational(1);
    v(2, 1) = GaussRational(1);
    v(3, 2) = GaussRational(1);
    v(0, 3) = GaussRational(1);
    return v;
}

Matrix double_block(const Matrix& m) {
    return assemble2x2(m, Matrix(m.rows(), m.cols()), Matrix(m.rows(), m.cols()), m);
}

Dictionary quat_dict(const std::string& model, AlgKind alg, int sgn2, const Matrix& vec_fwd) {
    Dictionary d;
    d.model = model;
    d.algebra = alg;
    d.side = "plus";
    d.realified = true;
    d.forward = c2_quat_forward(sgn2);
    d.backward = exact_inverse(d.forward);
    d.conj_twist = conj_twist_quat();
    d.vector_forward = vec_fwd;
    return d;
}

Dictionary quat_pair_dict(const std::string& model, AlgKind alg, int sgn2,
                          const Matrix& vec_fwd) {
    Dictionary d;
    d.model = model;
    d.algebra = alg;
    d.side = "plus";
    d.realified = true;
    d.forward = double_block(c2_quat_forward(sgn2));
    d.backward = exact_inverse(d.forward);
    d.conj_twist = double_block(conj_twist_quat());
    d.vector_forward = vec_fwd;
    return d;
}

}  // namespace

Dictionary dict_c2_h() { return quat_dict("cl4", AlgKind::H, 1, vector_forward_h()); }

Dictionary dict_c2_hsplit() {
    return quat_dict("cl22", AlgKind::Hsplit, -1, vector_forward_hsplit());
}

Dictionary dict_cl6_h2() { return quat_pair_dict("cl6", AlgKind::H, 1, vector_forward_h()); }

Dictionary dict_cl51_h2() { return quat_pair_dict("cl51", AlgKind::H, 1, vector_forward_h()); }

Dictionary dict_cl33_hsplit2() {
    return quat_pair_dict("cl33", AlgKind::Hsplit, -1, vector_forward_hsplit());
}

Dictionary dict_cl8_majorana(int chirality) {
    Dictionary d;
    d.model = "cl8";
    d.algebra = AlgKind::O;
    d.side = chirality >= 0 ? "plus" : "minus";
    d.realified = false;
    // The basis coordinates of either chiral half are the octonion
    // coordinates (I, e1..e7); the map is the identity, and all content
    // lives in the intertwining relations certified by the tests.
    d.forward = Matrix::identity(8);
    d.backward = Matrix::identity(8);
    d.conj_twist = Matrix::identity(8);
    d.vector_forward = Matrix::identity(8);
    return d;
}

Dictionary dict_cl44(const std::string& variant) {
    if (variant != "real" && variant != "complex")
        throw std::invalid_argument("unknown cl44 dictionary variant: " + variant);
    Dictionary d;
    d.model = variant == "real" ? "cl44-real" : "cl44-complex";
    d.algebra = AlgKind::Osplit;
    d.side = "plus";
    d.realified = false;
    d.forward = Matrix::identity(8);
    d.backward = Matrix::identity(8);
    d.vector_forward = Matrix::identity(8);
    if (variant == "real") {
        d.conj_twist = Matrix::identity(8);
    } else {
        // conjugation of the polyform coefficients flips the basis spinors
        // carrying an explicit i prefactor
        d.conj_twist = Matrix(8, 8);
        const int signs[8] = {1, -1, 1, -1, -1, 1, -1, 1};
        for (int a = 0; a < 8; ++a) d.conj_twist(a, a) = GaussRational(signs[a]);
        // u1 = a5 + i a6, u2 = a7 + i a4, u3 = a2 + i a1, u4 = a3 + i a0
        Matrix u(4, 8);
        const GaussRational one(1), i = GaussRational::i();
        u(0, 5) = one;
        u(0, 6) = i;
        u(1, 7) = one;
        u(1, 4) = i;
        u(2, 2) = one;
        u(2, 1) = i;
        u(3, 3) = one;
        u(3, 0) = i;
        d.u_from_alpha = u;
    }
    return d;
}

}  // namespace clif
