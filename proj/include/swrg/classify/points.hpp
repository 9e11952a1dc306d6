#pragma once

#include "swrg/code/linear_code.hpp"

#include <vector>

namespace swrg {

/// Vectors of R^l containing a unit, one per unit class (first unit coordinate equal to 1),
/// in lexicographic order of the little-endian base-|R| key. l <= 5.
std::vector<Vec> projective_points(const Ring& R, std::size_t ell);

/// Admissible generator columns for shape (k1, k2) over a depth-2 ring: (a, gamma*b) with
/// a in R^k1 containing a unit and b in {0,1}^k2, one per unit class. The first k1 points
/// are the unit vectors e_1..e_k1.
std::vector<Vec> shape_points(const Ring& R, int k1, int k2);

/// Messages m in R^k1 x {0,1}^k2 (0,1 read as ring elements) in enumeration order; m * column
/// ranges over the code as m does. Index 0 is the zero message.
std::vector<Vec> shape_messages(const Ring& R, int k1, int k2);

}  // namespace swrg
