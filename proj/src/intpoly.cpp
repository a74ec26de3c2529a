#include "digitseal/intpoly.hpp"

#include <stdexcept>
#include <utility>

namespace digitseal {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(mpz_class c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, mpz_class(0));
        p.c_[k] = std::move(c);
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    static const mpz_class zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) throw std::invalid_argument("leading(): zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> prod(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(prod));
}

IntPoly operator*(const mpz_class& s, const IntPoly& p) {
    if (s == 0) return IntPoly();
    IntPoly r(p);
    for (auto& v : r.c_) v *= s;
    return r;
}

bool operator<(const IntPoly& a, const IntPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        int cmp = mpz_cmp(a.c_[i].get_mpz_t(), b.c_[i].get_mpz_t());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

DivModResult divmod_monic(const IntPoly& a, const IntPoly& b) {
    if (b.degree() < 1 || !b.is_monic())
        throw std::invalid_argument("divmod_monic: divisor must be monic of degree >= 1");
    std::vector<mpz_class> rem(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {IntPoly(), a};
    std::vector<mpz_class> quo(dq + 1, mpz_class(0));
    for (int i = a.degree(); i >= db; --i) {
        mpz_class c = rem[i];
        if (c == 0) continue;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPoly();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return std::nullopt;
    std::vector<mpz_class> rem(a.coeffs());
    std::vector<mpz_class> quo(dq + 1, mpz_class(0));
    const mpz_class& lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(quo));
}

bool divides(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero()) return q.is_zero();
    return try_divide_exact(q, p).has_value();
}

IntPoly reciprocal(const IntPoly& p) {
    if (p.is_zero() || p.coeff(0) == 0)
        throw std::invalid_argument("reciprocal: requires a nonzero constant term");
    std::vector<mpz_class> rev(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(rev));
}

mpz_class height(const IntPoly& p) {
    mpz_class h(0);
    for (const auto& v : p.coeffs()) {
        mpz_class a = abs(v);
        if (a > h) h = a;
    }
    return h;
}

IntPoly derivative(const IntPoly& p, unsigned k) {
    IntPoly r(p);
    for (unsigned pass = 0; pass < k; ++pass) {
        if (r.is_zero()) return r;
        std::vector<mpz_class> d;
        d.reserve(r.coeffs().size());
        for (std::size_t i = 1; i < r.coeffs().size(); ++i)
            d.push_back(mpz_class(i) * r.coeffs()[i]);
        r = IntPoly(std::move(d));
    }
    return r;
}

IntPoly substitute_neg_x(const IntPoly& p) {
    std::vector<mpz_class> c(p.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
}

mpz_class evaluate(const IntPoly& p, const mpz_class& x) {
    mpz_class acc(0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc *= x;
        acc += p.coeffs()[i];
    }
    return acc;
}

std::size_t term_count(const IntPoly& p) {
    std::size_t n = 0;
    for (const auto& v : p.coeffs())
        if (v != 0) ++n;
    return n;
}

mpz_class content(const IntPoly& p) {
    mpz_class g(0);
    for (const auto& v : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = content(p);
    if (p.leading() < 0) c = -c;
    std::vector<mpz_class> out;
    out.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) out.push_back(v / c);
    return IntPoly(std::move(out));
}

namespace {

// Remainder of lc(b)^k * a under division by b for a k large enough to keep
// everything integral. Used only inside the gcd PRS, where the result is
// content-stripped immediately, so the exact multiplier is irrelevant.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const mpz_class& lead = b.leading();
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        mpz_class c = a.leading();
        int k = a.degree() - db;
        std::vector<mpz_class> next(a.coeffs());
        for (auto& v : next) v *= lead;
        for (int j = 0; j <= db; ++j) next[k + j] -= c * b.coeff(j);
        a = IntPoly(std::move(next));
    }
    return a;
}

} // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return content(b) * primitive_part(b);
    if (b.is_zero()) return content(a) * primitive_part(a);
    mpz_class cg;
    mpz_class ca = content(a), cb = content(b);
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly f = primitive_part(a);
    IntPoly g = primitive_part(b);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = pseudo_rem(f, g);
        f = std::move(g);
        g = primitive_part(r);
    }
    return cg * primitive_part(f);
}

std::string encode_key(const IntPoly& p) {
    std::string out;
    out.reserve(p.coeffs().size() * 4 + 4);
    for (const auto& v : p.coeffs()) {
        std::string digits = v.get_str(62);
        out += digits;
        out += ',';
    }
    return out;
}

} // namespace digitseal
