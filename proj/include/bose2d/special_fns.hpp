#pragma once

namespace bose2d {

// Dilogarithm Li2(z) = -int_0^z ln(1-t)/t dt for z in [0,1].
// Power series for z <= 0.5, reflection identity for z > 0.5.
// Absolute error <= 1e-13.  Throws std::domain_error outside [0,1].
double li2(double z);

// Li2(1-u) for u in [0,1], evaluated without forming 1-u (accurate when u is
// tiny, where the double 1-u would round to 1).
double li2_one_minus(double u);

// ln(x) with a domain guard: throws std::domain_error for x <= 0.
double checked_log(double x);

}  // namespace bose2d
