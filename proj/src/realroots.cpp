#include "digitseal/realroots.hpp"

#include "digitseal/squarefree.hpp"

#include <stdexcept>
#include <vector>

namespace digitseal {

namespace {

int sign_of(const mpz_class& v) { return v < 0 ? -1 : v > 0 ? 1 : 0; }

// Pseudo-remainder that tracks the sign of the accumulated multiplier m in
// m*a = q*g + r, so the caller can recover the sign of the true remainder.
std::pair<IntPoly, int> tracked_prem(IntPoly a, const IntPoly& g) {
    const mpz_class& lead = g.leading();
    int lead_sign = sign_of(lead);
    int msign = 1;
    int dg = g.degree();
    while (!a.is_zero() && a.degree() >= dg) {
        mpz_class c = a.leading();
        int k = a.degree() - dg;
        std::vector<mpz_class> next(a.coeffs());
        for (auto& v : next) v *= lead;
        for (int j = 0; j <= dg; ++j) next[k + j] -= c * g.coeff(j);
        a = IntPoly(std::move(next));
        msign *= lead_sign;
    }
    return {std::move(a), msign};
}

IntPoly strip_content(const IntPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = content(p);
    std::vector<mpz_class> out;
    out.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) out.push_back(v / c);
    return IntPoly(std::move(out));
}

// Sturm chain of a squarefree polynomial. Each element equals the classical
// one up to a positive rational factor, which preserves all signs.
std::vector<IntPoly> sturm_chain(const IntPoly& s) {
    std::vector<IntPoly> chain;
    chain.push_back(s);
    IntPoly d = derivative(s);
    if (d.is_zero()) return chain;
    chain.push_back(strip_content(d));
    while (chain.back().degree() > 0) {
        auto [r, msign] = tracked_prem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        IntPoly next = strip_content(r);
        if (msign > 0) next = -next;
        chain.push_back(std::move(next));
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// sign of q^deg(p) * p(num/den) for den > 0
int sign_at(const IntPoly& p, const mpz_class& num, const mpz_class& den) {
    if (p.is_zero()) return 0;
    mpz_class acc = p.leading();
    mpz_class dp = den;
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = acc * num + p.coeff(i) * dp;
        if (i) dp *= den;
    }
    return sign_of(acc);
}

int variations_at(const std::vector<IntPoly>& chain, const mpq_class& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) signs.push_back(sign_at(f, x.get_num(), x.get_den()));
    return variations(signs);
}

int variations_at_pos_inf(const std::vector<IntPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) signs.push_back(f.is_zero() ? 0 : sign_of(f.leading()));
    return variations(signs);
}

int variations_at_neg_inf(const std::vector<IntPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& f : chain) {
        int s = f.is_zero() ? 0 : sign_of(f.leading());
        if (f.degree() % 2) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

} // namespace

int count_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    IntPoly s = squarefree_part(p);
    if (s.degree() == 0) return 0;
    auto chain = sturm_chain(s);
    return variations_at_neg_inf(chain) - variations_at_pos_inf(chain);
}

int count_real_roots_between(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots_between: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("count_real_roots_between: need a < b");
    if (p.degree() == 0) return 0;
    IntPoly s = squarefree_part(p);
    if (s.degree() == 0) return 0;
    auto chain = sturm_chain(s);
    int count = variations_at(chain, a) - variations_at(chain, b);
    if (sign_at(s, b.get_num(), b.get_den()) == 0) --count;
    return count;
}

bool has_nonneg_real_root(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("has_nonneg_real_root: zero polynomial");
    if (p.degree() == 0) return false;
    if (p.coeff(0) == 0) return true;
    IntPoly s = squarefree_part(p);
    if (s.degree() == 0) return false;
    auto chain = sturm_chain(s);
    return variations_at(chain, mpq_class(0)) - variations_at_pos_inf(chain) > 0;
}

} // namespace digitseal
