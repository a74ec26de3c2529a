#ifndef DIGITSEAL_CYCLOTOMIC_HPP
#define DIGITSEAL_CYCLOTOMIC_HPP

#include "digitseal/intpoly.hpp"

#include <vector>

namespace digitseal {

/// n-th cyclotomic polynomial, n >= 1. Results are cached.
IntPoly cyclotomic(unsigned n);

/// Euler totient.
unsigned totient(unsigned n);

struct CyclotomicSplit {
    /// Integer unit: sign times content of the input.
    mpz_class scalar;
    /// Product of the cyclotomic factors pulled out (monic; 1 if none).
    IntPoly cyclotomic_part;
    /// The cyclotomic-free cofactor, primitive with positive leading
    /// coefficient. scalar * cyclotomic_part * noncyclotomic = input.
    IntPoly noncyclotomic;
    /// (n, multiplicity) for each cyclotomic factor found, n ascending.
    std::vector<std::pair<unsigned, unsigned>> indices;
};

/// Split off every cyclotomic factor of a nonzero polynomial by trial exact
/// division, using that an index n can contribute only if totient(n) does not
/// exceed the remaining degree (so n <= 2*deg^2).
CyclotomicSplit cyclotomic_split(const IntPoly& p);

} // namespace digitseal

#endif
