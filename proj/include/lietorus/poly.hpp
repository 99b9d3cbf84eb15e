#pragma once

#include <vector>

#include "lietorus/cyclotomic.hpp"

namespace lietorus {

/// Dense univariate polynomial over the cyclotomic field, constant term first.
/// The zero polynomial is the empty vector.
using CycPoly = std::vector<CycNumber>;

void poly_trim(CycPoly& p);
long poly_degree(const CycPoly& p);  // -1 for the zero polynomial
CycPoly poly_add(const CycPoly& a, const CycPoly& b);
CycPoly poly_sub(const CycPoly& a, const CycPoly& b);
CycPoly poly_mul(const CycPoly& a, const CycPoly& b);
CycPoly poly_scale(const CycPoly& a, const CycNumber& c);
/// Quotient and remainder with nonzero divisor.
std::pair<CycPoly, CycPoly> poly_divmod(const CycPoly& num, const CycPoly& den);
CycPoly poly_monic(const CycPoly& p);
CycPoly poly_gcd(CycPoly a, CycPoly b);  // monic gcd
CycPoly poly_derivative(const CycPoly& p);
CycNumber poly_eval(const CycPoly& p, const CycNumber& x);
CycPoly poly_from_roots(const std::vector<CycNumber>& roots);
bool poly_is_zero(const CycPoly& p);

/// All roots of p that are rational or roots of unity, with multiplicity,
/// found by exact deflation.  Returns false if a nonconstant factor remains
/// whose roots fall outside that search domain.
bool poly_roots_in_domain(const CycPoly& p, std::vector<CycNumber>& roots_out,
                          CycPoly* remainder_out = nullptr);

}  // namespace lietorus
