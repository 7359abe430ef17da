#pragma once

#include <string>
#include <vector>

#include "abelian/transform.hpp"

namespace abelian {

// Parses a polynomial expression over L and reduces it into L(dims).
// Variables: X1..Xs; X and Y also name axes 1 and 2, and in rank 1 every
// variable names the single axis. Coefficients are integers mod p or powers
// of w, the primitive element of L. '/' is exact division of true polynomials.
MultiPoly parse_poly(const FieldPtr& ctx, const std::vector<int>& dims, const std::string& text);

// "1 + X1 + X1^2*X2"; coefficients outside F_p print as w^k
std::string format_poly(const MultiPoly& f);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace abelian
