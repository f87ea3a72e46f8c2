#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clif/clifford.hpp"
#include "clif/composition.hpp"
#include "clif/form.hpp"
#include "clif/matrix.hpp"
#include "clif/polyform.hpp"
#include "clif/scalar.hpp"

namespace clif {

/// Canonical JSON serialization: keys sorted (nlohmann objects are ordered
/// maps), rationals as canonical "p/q" strings, complex numbers as
/// {"re","im"} objects. Two equal values always serialize to the same bytes.
nlohmann::json json_of(const Rational& r);
nlohmann::json json_of(const GaussRational& z);
nlohmann::json json_of(const std::vector<GaussRational>& v);
nlohmann::json json_of(const Matrix& m);
/// Terms in increasing mask order, each {"labels": [...], "coeff": {...}}.
nlohmann::json json_of(const Form& f);
/// {"gen": n, "terms": [{"indices": [...], "coeff": {...}}]}.
nlohmann::json json_of(const Polyform& p);
/// {"alg": "O-split", "re": [...], "im": [...]}.
nlohmann::json json_of(const AlgElement& x);

/// Canonical text rendering with a trailing newline.
std::string dump_canonical(const nlohmann::json& j);

Rational rational_from_json(const nlohmann::json& j);
GaussRational gauss_from_json(const nlohmann::json& j);
/// Accepts the algebra-coordinate spinor format {"alg","re","im"} ("im"
/// optional) and returns the complexified element.
AlgElement spinor_from_json(const nlohmann::json& j);
/// Accepts {"gen","terms"} with 1-based increasing index lists.
Polyform polyform_from_json(const nlohmann::json& j);

}  // namespace clif
