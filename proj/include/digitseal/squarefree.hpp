#ifndef DIGITSEAL_SQUAREFREE_HPP
#define DIGITSEAL_SQUAREFREE_HPP

#include "digitseal/intpoly.hpp"

#include <vector>

namespace digitseal {

struct SquarefreeDecomposition {
    /// Integer unit: sign times content, so that
    /// unit * prod parts[i].first^parts[i].second == input.
    mpz_class unit;
    /// Pairwise coprime squarefree primitive factors with positive leading
    /// coefficients, multiplicities strictly increasing.
    std::vector<std::pair<IntPoly, unsigned>> parts;
};

/// Yun's algorithm over Z[X]. Input must be nonzero.
SquarefreeDecomposition squarefree_decomposition(const IntPoly& p);

/// Product of the distinct irreducible factors (the radical), primitive with
/// positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

} // namespace digitseal

#endif
