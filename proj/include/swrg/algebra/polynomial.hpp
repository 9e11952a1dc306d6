#pragma once

#include <string>
#include <vector>

namespace swrg::poly {

/// Dense coefficient vector, lowest degree first. Coefficients live in Z/modulus.
using Coeffs = std::vector<int>;

int degree(const Coeffs& a);  // -1 for the zero polynomial
Coeffs normalize(Coeffs a, int modulus);
Coeffs add(const Coeffs& a, const Coeffs& b, int modulus);
Coeffs sub(const Coeffs& a, const Coeffs& b, int modulus);
Coeffs mul(const Coeffs& a, const Coeffs& b, int modulus);
Coeffs scale(const Coeffs& a, int c, int modulus);

/// Remainder modulo a monic polynomial.
Coeffs rem_monic(const Coeffs& a, const Coeffs& monic, int modulus);

/// a(x) -> a(-x)
Coeffs negate_variable(const Coeffs& a, int modulus);
/// a(x) -> a(x^2)
Coeffs square_variable(const Coeffs& a);

/// True if the monic polynomial f of degree d over the prime field F_p has x of
/// multiplicative order p^d - 1 in F_p[x]/(f). Such f is irreducible and primitive.
bool is_primitive(const Coeffs& f, int p);

std::string to_string(const Coeffs& a, char var = 'x');

}  // namespace swrg::poly
