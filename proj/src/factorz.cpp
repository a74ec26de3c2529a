#include "digitseal/factorz.hpp"

#include "digitseal/errors.hpp"
#include "digitseal/squarefree.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace digitseal {

namespace {

// Monic real-coefficient enclosure of the factor carried by one disk (a real
// root) or one conjugate pair, lowest-first, leading 1 omitted.
struct Item {
    int degree = 0;
    std::vector<Interval> low; // size == degree
};

Item make_real_item(const RootDisk& disk, mpfr_prec_t prec) {
    Interval x = Interval::point(disk.center_re);
    Interval r(prec);
    mpfr_neg(r.lo_ref().raw(), disk.radius.raw(), MPFR_RNDD);
    mpfr_set(r.hi_ref().raw(), disk.radius.raw(), MPFR_RNDU);
    Item it;
    it.degree = 1;
    it.low.push_back(-(x + r));
    return it;
}

Item make_pair_item(const RootDisk& disk, mpfr_prec_t prec) {
    // X^2 + bX + c with b = -2 re(alpha), c = |alpha|^2
    Interval re = Interval::point(disk.center_re);
    Interval r(prec);
    mpfr_neg(r.lo_ref().raw(), disk.radius.raw(), MPFR_RNDD);
    mpfr_set(r.hi_ref().raw(), disk.radius.raw(), MPFR_RNDU);
    Interval mod = disk.modulus_interval();
    Item it;
    it.degree = 2;
    it.low.push_back(square(mod));
    it.low.push_back(mul(re + r, mpz_class(-2)));
    return it;
}

// Intervals know the true coefficient lies inside them; an integer candidate
// exists only if the interval traps exactly one integer.
enum class IntCount { none, one, many };

IntCount integers_in(const Interval& iv, mpz_class& out) {
    if (!iv.is_finite()) return IntCount::many;
    mpz_class lo, hi;
    mpfr_get_z(lo.get_mpz_t(), iv.lo().raw(), MPFR_RNDU);
    mpfr_get_z(hi.get_mpz_t(), iv.hi().raw(), MPFR_RNDD);
    if (lo > hi) return IntCount::none;
    if (lo != hi) return IntCount::many;
    out = lo;
    return IntCount::one;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    std::vector<mpz_class> ds;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            ds.push_back(d);
            ds.push_back(a / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

struct RetryNeeded {};

std::vector<Interval> mul_item(const std::vector<Interval>& a, const Item& it,
                               mpfr_prec_t prec) {
    // a and the result are monic with the leading 1 stored explicitly
    std::vector<Interval> full = it.low;
    full.push_back(Interval::from_long(1, prec));
    std::vector<Interval> out(a.size() + full.size() - 1, Interval::from_long(0, prec));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < full.size(); ++j)
            out[i + j] = out[i + j] + a[i] * full[j];
    return out;
}

// Splits a primitive squarefree polynomial into irreducibles using the
// certified disks in prof. Throws RetryNeeded when a coefficient interval is
// too wide to pin a unique integer.
std::vector<IntPoly> split_squarefree(const IntPoly& g, const RootProfile& prof) {
    const mpfr_prec_t prec = prof.precision;
    std::vector<Item> items;
    for (const RootDisk& disk : prof.disks) {
        if (disk.is_real)
            items.push_back(make_real_item(disk, prec));
        else if (mpfr_sgn(disk.center_im.raw()) > 0)
            items.push_back(make_pair_item(disk, prec));
    }
    const unsigned n = static_cast<unsigned>(items.size());

    std::vector<IntPoly> found;
    IntPoly q = g;
    std::uint32_t alive = (n >= 32) ? 0xffffffffu : ((1u << n) - 1u);

restart:
    if (q.degree() >= 2) {
        std::vector<mpz_class> lead_divs = positive_divisors(q.leading());
        for (int t = 1; t <= q.degree() / 2; ++t) {
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                if ((mask & alive) != mask) continue;
                int deg = 0;
                for (unsigned i = 0; i < n; ++i)
                    if (mask & (1u << i)) deg += items[i].degree;
                if (deg != t) continue;

                std::vector<Interval> prod{Interval::from_long(1, prec)};
                for (unsigned i = 0; i < n; ++i)
                    if (mask & (1u << i)) prod = mul_item(prod, items[i], prec);

                for (const mpz_class& ell : lead_divs) {
                    std::vector<mpz_class> cand(prod.size());
                    cand.back() = ell;
                    bool viable = true;
                    for (std::size_t i = 0; i + 1 < prod.size(); ++i) {
                        mpz_class z;
                        switch (integers_in(mul(prod[i], ell), z)) {
                        case IntCount::none: viable = false; break;
                        case IntCount::many: throw RetryNeeded{};
                        case IntCount::one: cand[i] = z; break;
                        }
                        if (!viable) break;
                    }
                    if (!viable) continue;
                    IntPoly h = primitive_part(IntPoly(std::move(cand)));
                    if (h.degree() < 1) continue;
                    if (auto quo = try_divide_exact(q, h)) {
                        found.push_back(h);
                        q = *quo;
                        alive &= ~mask;
                        goto restart;
                    }
                }
            }
        }
    }
    if (q.degree() >= 1) found.push_back(q);
    return found;
}

} // namespace

std::vector<std::pair<IntPoly, unsigned>>
factor_noncyclotomic(const IntPoly& p, const FactorOptions& options) {
    if (p.is_zero()) throw std::invalid_argument("factor_noncyclotomic: zero polynomial");
    if (content(p) != 1)
        throw std::invalid_argument("factor_noncyclotomic: input must be primitive");
    if (p.degree() > static_cast<int>(options.max_degree))
        throw UnsupportedDegree("factor_noncyclotomic: degree " +
                                std::to_string(p.degree()) + " exceeds cap " +
                                std::to_string(options.max_degree));

    std::vector<std::pair<IntPoly, unsigned>> out;
    if (p.degree() < 1) return out;

    SquarefreeDecomposition sq = squarefree_decomposition(p);
    for (const auto& [part, mult] : sq.parts) {
        if (part.degree() == 1) {
            out.emplace_back(part, mult);
            continue;
        }
        RootProfile prof = isolate_roots(part, options.isolate);
        for (;;) {
            try {
                for (IntPoly& h : split_squarefree(part, prof))
                    out.emplace_back(std::move(h), mult);
                break;
            } catch (const RetryNeeded&) {
                if (!refine_step(prof))
                    throw PrecisionExhausted(
                        "factor_noncyclotomic: precision cap reached before "
                        "coefficients resolved");
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        if (a.first < b.first) return true;
        if (b.first < a.first) return false;
        return a.second < b.second;
    });
    return out;
}

} // namespace digitseal
