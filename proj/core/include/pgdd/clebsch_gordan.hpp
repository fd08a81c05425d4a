#pragma once

namespace pgdd {

// Clebsch-Gordan coefficient <j1 m1, j2 m2 | J M> in the Condon-Shortley
// phase convention.  Returns 0 outside the selection rules; throws
// std::invalid_argument if any argument is not on the half-integer grid.
// The alternating sum is evaluated in exact big-integer rationals and
// converted to double at the end.
double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M);

}  // namespace pgdd
