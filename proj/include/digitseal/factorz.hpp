#ifndef DIGITSEAL_FACTORZ_HPP
#define DIGITSEAL_FACTORZ_HPP

#include "digitseal/intpoly.hpp"
#include "digitseal/roots.hpp"

#include <utility>
#include <vector>

namespace digitseal {

struct FactorOptions {
    unsigned max_degree = 16;
    IsolateOptions isolate;
};

/// Irreducible factorization over Z of a primitive polynomial of positive
/// degree: certified root disks drive a subset search (ascending candidate
/// degree, conjugate-closed subsets, unique-integer coefficient extraction),
/// and every candidate is confirmed by exact division. Factors come back
/// primitive with positive leading coefficient, sorted by degree then
/// coefficients, each with its multiplicity. Throws UnsupportedDegree when
/// deg p exceeds options.max_degree.
std::vector<std::pair<IntPoly, unsigned>>
factor_noncyclotomic(const IntPoly& p, const FactorOptions& options = {});

} // namespace digitseal

#endif
