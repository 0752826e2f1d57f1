// Univariate polynomials over the field, with exact root extraction.
#pragma once

#include "hq/field.hpp"

#include <optional>
#include <vector>

namespace hq {

// Coefficients from degree 0 up; the zero polynomial is empty.
using Poly = std::vector<FieldElement>;

void poly_trim(Poly& p);
FieldElement poly_eval(const Poly& p, const FieldElement& x);
Poly poly_derivative(const Poly& p);
// Quotient and remainder of a / b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic

// Distinct rational roots of a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

// All roots (with multiplicity) when p splits over its context, found by
// rational roots plus a final quadratic factor. Empty if p does not split this
// way or has irrational coefficients.
std::optional<std::vector<FieldElement>> split_roots(const Poly& p);

}  // namespace hq
