#ifndef DIGITSEAL_MAHLER_HPP
#define DIGITSEAL_MAHLER_HPP

#include "digitseal/intpoly.hpp"

namespace digitseal {

/// Mahler measure |lc(p)| * prod over roots of max(1, |root|), computed from
/// certified root enclosures and returned within tol of the true value.
/// Always >= 1 for nonzero integer input.
double mahler_measure(const IntPoly& p, double tol = 1e-9);

} // namespace digitseal

#endif
