#ifndef DIGITSEAL_REALROOTS_HPP
#define DIGITSEAL_REALROOTS_HPP

#include "digitseal/intpoly.hpp"

namespace digitseal {

/// Number of distinct real roots of p (multiplicities ignored).
/// p must be nonzero.
int count_real_roots(const IntPoly& p);

/// Number of distinct real roots in the open interval (a, b), a < b.
int count_real_roots_between(const IntPoly& p, const mpq_class& a, const mpq_class& b);

/// Does p have a real root >= 0? Exact, via Sturm sequences.
bool has_nonneg_real_root(const IntPoly& p);

} // namespace digitseal

#endif
