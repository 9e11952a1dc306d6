#pragma once

#include "swrg/algebra/field.hpp"
#include "swrg/algebra/polynomial.hpp"
#include "swrg/algebra/ring.hpp"

#include <vector>

namespace swrg {

/// Graeffe lift of a binary primitive polynomial to Z4: with f = e(x^2) + x o(x^2),
/// h(y) = (-1)^deg f (e(y)^2 - y o(y)^2) mod 4. The result is monic, h = f mod 2 and
/// h(x^2) = +-f(x) f(-x).
poly::Coeffs hensel_lift(const poly::Coeffs& f);

/// h(x^2) == +-f(x) f(-x) over Z4, with f read as a 0/1 polynomial.
bool graeffe_identity(const poly::Coeffs& f, const poly::Coeffs& h);

/// Monic h over Z4 whose reduction is primitive and which divides x^{2^r-1} - 1.
bool is_basic_primitive(const poly::Coeffs& h);

/// Residue of the polynomial variable in GR(4,r).
Ring::Elem gr4_xi(const Ring& R);
/// Ring automorphism fixing Z4 with xi -> xi^2.
Ring::Elem gr4_frobenius(const Ring& R, Ring::Elem x);
/// Sum of the r Frobenius conjugates; returns 0..3.
std::uint32_t gr4_trace(const Ring& R, Ring::Elem x);
/// {0, 1, xi, ..., xi^{q-2}} in that order.
std::vector<Ring::Elem> teichmuller_set(const Ring& R);

Field::Elem field_trace(const Field& F, Field::Elem x);
/// Componentwise trace F_{p^f}+uF_{p^f} -> F_p+uF_p. `big` is fqu(p,f), `small` is fqu(p,1).
Ring::Elem fqu_trace(const Ring& big, const Ring& small, Ring::Elem x);

}  // namespace swrg
