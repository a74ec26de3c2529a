#include "digitseal/squarefree.hpp"

#include <stdexcept>

namespace digitseal {

namespace {

IntPoly exact_quot(const IntPoly& a, const IntPoly& b) {
    auto q = try_divide_exact(a, b);
    if (!q) throw std::logic_error("squarefree_decomposition: inexact division");
    return *q;
}

} // namespace

SquarefreeDecomposition squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    SquarefreeDecomposition out;
    out.unit = content(p);
    if (p.leading() < 0) out.unit = -out.unit;
    IntPoly f = primitive_part(p);
    if (f.degree() == 0) return out;

    IntPoly fp = derivative(f);
    IntPoly a0 = gcd(f, fp);
    IntPoly b = exact_quot(f, a0);
    IntPoly d = exact_quot(fp, a0) - derivative(b);
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPoly g = gcd(b, d);
        if (g.degree() > 0) out.parts.emplace_back(g, i);
        b = exact_quot(b, g);
        d = exact_quot(d, g) - derivative(b);
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    SquarefreeDecomposition sf = squarefree_decomposition(p);
    IntPoly out = IntPoly::constant(1);
    for (const auto& [factor, mult] : sf.parts) out = out * factor;
    return out;
}

} // namespace digitseal
