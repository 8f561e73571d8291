#ifndef EQLAB_TEXT_IO_HPP
#define EQLAB_TEXT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqlab/polynomial.hpp"
#include "eqlab/upoly.hpp"

namespace eqlab::algebra {

using VarNames = std::vector<std::string>;

/// Parses an expression such as `3/2*x^2*y - z^3` or `(x+y)^2 - (x-y)^5`.
/// Division is allowed by nonzero constants only. Over an extension field
/// the generator name denotes the generator.
Polynomial parse_polynomial(std::string_view text, const VarNames& vars, const Field& field);

/// Canonical printing in descending graded-lex order; parse_polynomial
/// reads it back exactly.
std::string format_polynomial(const Polynomial& f, const VarNames& vars);
std::string format_upoly(const UPoly& f, std::string_view var);
std::string format_scalar(const Field& field, const Scalar& s);

/// A polynomial together with the names it was read with.
struct NamedPolynomial {
    VarNames vars;
    Polynomial poly;
};

/// Text document: optional header lines `vars: x, y, z` and
/// `field: <descriptor>`, `#` comments, then the expression (may span
/// lines). Without a vars header the identifiers are collected in order of
/// first appearance.
NamedPolynomial parse_document(std::string_view text, const Field& default_field = Field::rationals());

/// {"vars":[...],"terms":[[[e0,e1,...],"coef"],...]} with optional "field".
nlohmann::json to_json(const Polynomial& f, const VarNames& vars);
NamedPolynomial from_json(const nlohmann::json& j, const Field& default_field = Field::rationals());

/// Default names x, y, z, w for up to four variables, x0.. beyond.
VarNames default_names(std::size_t n);

} // namespace eqlab::algebra

#endif
