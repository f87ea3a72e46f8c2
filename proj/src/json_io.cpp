#include "clif/json_io.hpp"

#include <stdexcept>

namespace clif {

namespace {

std::vector<int> mask_bits(uint8_t mask, int base) {
    std::vector<int> out;
    for (int b = 0; b < 8; ++b)
        if (mask & (1u << b)) out.push_back(b + base);
    return out;
}

}  // namespace

nlohmann::json json_of(const Rational& r) {
    return to_string(r);
}

nlohmann::json json_of(const GaussRational& z) {
    return {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

nlohmann::json json_of(const std::vector<GaussRational>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& z : v) arr.push_back(json_of(z));
    return arr;
}

nlohmann::json json_of(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(json_of(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json json_of(const Form& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mask, c] : f.terms())
        terms.push_back({{"labels", mask_bits(mask, 0)}, {"coeff", json_of(c)}});
    return terms;
}

nlohmann::json json_of(const Polyform& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mask, c] : p.terms())
        terms.push_back({{"indices", mask_bits(mask, 1)}, {"coeff", json_of(c)}});
    return {{"gen", p.generators()}, {"terms", std::move(terms)}};
}

nlohmann::json json_of(const AlgElement& x) {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (const auto& z : x.coords) {
        re.push_back(to_string(z.re));
        im.push_back(to_string(z.im));
    }
    return {{"alg", alg_kind_name(x.kind)}, {"re", std::move(re)}, {"im", std::move(im)}};
}

std::string dump_canonical(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        auto r = parse_rational(j.get<std::string>());
        if (r) return *r;
    }
    throw std::invalid_argument("not a rational: " + j.dump());
}

GaussRational gauss_from_json(const nlohmann::json& j) {
    if (!j.is_object()) return GaussRational(rational_from_json(j));
    GaussRational z;
    if (j.contains("re")) z.re = rational_from_json(j.at("re"));
    if (j.contains("im")) z.im = rational_from_json(j.at("im"));
    return z;
}

AlgElement spinor_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("alg") || !j.contains("re"))
        throw std::invalid_argument("spinor JSON needs \"alg\" and \"re\"");
    AlgKind kind = parse_alg_kind(j.at("alg").get<std::string>());
    AlgElement x = AlgElement::zero(kind);
    const auto& re = j.at("re");
    if (!re.is_array() || re.size() != x.coords.size())
        throw std::invalid_argument("spinor \"re\" must list all coordinates");
    for (size_t a = 0; a < x.coords.size(); ++a) x.coords[a].re = rational_from_json(re[a]);
    if (j.contains("im")) {
        const auto& im = j.at("im");
        if (!im.is_array() || im.size() != x.coords.size())
            throw std::invalid_argument("spinor \"im\" must list all coordinates");
        for (size_t a = 0; a < x.coords.size(); ++a) x.coords[a].im = rational_from_json(im[a]);
    }
    return x;
}

Polyform polyform_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("gen") || !j.contains("terms"))
        throw std::invalid_argument("polyform JSON needs \"gen\" and \"terms\"");
    int n = j.at("gen").get<int>();
    Polyform p(n);
    for (const auto& t : j.at("terms")) {
        std::vector<int> idx = t.at("indices").get<std::vector<int>>();
        p += Polyform::monomial(n, idx, gauss_from_json(t.at("coeff")));
    }
    return p;
}

}  // namespace clif
