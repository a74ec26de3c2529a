#include "digitseal/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace digitseal {

unsigned totient(unsigned n) {
    if (n == 0) throw std::invalid_argument("totient(0)");
    unsigned result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        unsigned pk = 1;
        while (n % p == 0) {
            n /= p;
            pk *= p;
        }
        result *= pk * (p - 1);
    }
    if (n > 1) result *= n - 1;
    return result;
}

IntPoly cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic(0)");
    static std::mutex mu;
    static std::unordered_map<unsigned, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // X^n - 1 divided by the cyclotomics of all proper divisors.
    std::vector<mpz_class> xn(n + 1, mpz_class(0));
    xn[0] = -1;
    xn[n] = 1;
    IntPoly result(std::move(xn));
    for (unsigned d = 1; d < n; ++d) {
        if (n % d) continue;
        IntPoly phi_d;
        if (auto it = cache.find(d); it != cache.end()) {
            phi_d = it->second;
        } else {
            // divisors are computed in increasing order on the way down,
            // so fill the cache by direct recursion on the same pattern
            std::vector<mpz_class> xd(d + 1, mpz_class(0));
            xd[0] = -1;
            xd[d] = 1;
            phi_d = IntPoly(std::move(xd));
            for (unsigned e = 1; e < d; ++e) {
                if (d % e) continue;
                phi_d = divmod_monic(phi_d, cache.at(e)).quotient;
            }
            cache.emplace(d, phi_d);
        }
        result = divmod_monic(result, phi_d).quotient;
    }
    cache.emplace(n, result);
    return result;
}

CyclotomicSplit cyclotomic_split(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cyclotomic_split: zero polynomial");
    CyclotomicSplit out;
    out.scalar = content(p);
    if (p.leading() < 0) out.scalar = -out.scalar;
    out.cyclotomic_part = IntPoly::constant(1);
    IntPoly f = primitive_part(p);

    unsigned d0 = static_cast<unsigned>(f.degree());
    unsigned bound = 2 * d0 * d0;
    for (unsigned n = 1; n <= bound && f.degree() > 0; ++n) {
        if (totient(n) > static_cast<unsigned>(f.degree())) continue;
        IntPoly phi = cyclotomic(n);
        unsigned mult = 0;
        while (true) {
            DivModResult dm = divmod_monic(f, phi);
            if (!dm.remainder.is_zero()) break;
            f = dm.quotient;
            ++mult;
            if (f.degree() < phi.degree()) break;
        }
        if (mult) {
            out.indices.emplace_back(n, mult);
            for (unsigned i = 0; i < mult; ++i) out.cyclotomic_part = out.cyclotomic_part * phi;
        }
    }
    out.noncyclotomic = std::move(f);
    return out;
}

} // namespace digitseal
