#include "digitseal/polytext.hpp"

#include <cctype>
#include <stdexcept>

namespace digitseal {

namespace {

bool is_var(char c) { return c == 'x' || c == 'X'; }

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

mpz_class parse_uint(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("parse_poly: expected a number");
    return mpz_class(std::string(s.substr(start, i - start)), 10);
}

IntPoly parse_symbolic(std::string_view s) {
    std::vector<mpz_class> coeffs;
    auto add_term = [&](const mpz_class& c, unsigned long e) {
        if (coeffs.size() <= e) coeffs.resize(e + 1, mpz_class(0));
        coeffs[e] += c;
    };
    std::size_t i = 0;
    skip_ws(s, i);
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws(s, i);
        } else if (!first) {
            throw std::invalid_argument("parse_poly: expected '+' or '-' between terms");
        }
        first = false;

        mpz_class mag(1);
        bool have_num = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
        if (have_num) mag = parse_uint(s, i);
        skip_ws(s, i);

        unsigned long exp = 0;
        if (i < s.size() && is_var(s[i])) {
            ++i;
            skip_ws(s, i);
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws(s, i);
                mpz_class e = parse_uint(s, i);
                if (!e.fits_ulong_p()) throw std::invalid_argument("parse_poly: exponent too large");
                exp = e.get_ui();
            }
        } else if (!have_num) {
            throw std::invalid_argument("parse_poly: expected a term");
        }
        add_term(sign * mag, exp);
        skip_ws(s, i);
    }
    if (first) throw std::invalid_argument("parse_poly: empty input");
    return IntPoly(std::move(coeffs));
}

IntPoly parse_coeff_list(std::string_view s) {
    std::vector<mpz_class> coeffs;
    std::size_t i = 0;
    while (true) {
        skip_ws(s, i);
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("parse_poly: expected an integer in coefficient list");
        coeffs.emplace_back(std::string(s.substr(start, i - start)), 10);
        skip_ws(s, i);
        if (i == s.size()) break;
        if (s[i] != ',') throw std::invalid_argument("parse_poly: expected ',' in coefficient list");
        ++i;
    }
    return IntPoly(std::move(coeffs));
}

} // namespace

IntPoly parse_poly(std::string_view text) {
    bool symbolic = false;
    for (char c : text)
        if (is_var(c) || c == '^') symbolic = true;
    if (text.find(',') != std::string_view::npos) {
        if (symbolic) throw std::invalid_argument("parse_poly: mixed coefficient-list and symbolic syntax");
        return parse_coeff_list(text);
    }
    if (symbolic) return parse_symbolic(text);
    // a bare integer works under either reading
    return parse_coeff_list(text);
}

std::string to_symbolic(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int e = p.degree(); e >= 0; --e) {
        const mpz_class& c = p.coeff(e);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? '-' : '+';
        }
        mpz_class a = abs(c);
        if (a != 1 || e == 0) out += a.get_str();
        if (e >= 1) {
            out += 'x';
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
    }
    return out;
}

std::string to_coeff_list(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += ',';
        out += p.coeff(i).get_str();
    }
    return out;
}

IntPoly parse_sign_string(std::string_view text) {
    std::vector<mpz_class> rev;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '+')
            rev.emplace_back(1);
        else if (c == '-')
            rev.emplace_back(-1);
        else
            throw std::invalid_argument("parse_sign_string: only '+', '-' and whitespace allowed");
    }
    if (rev.empty()) throw std::invalid_argument("parse_sign_string: empty input");
    std::vector<mpz_class> coeffs(rev.rbegin(), rev.rend());
    return IntPoly(std::move(coeffs));
}

std::string to_sign_string(const IntPoly& p) {
    std::string out;
    for (int e = p.degree(); e >= 0; --e) {
        const mpz_class& c = p.coeff(e);
        if (c == 1)
            out += '+';
        else if (c == -1)
            out += '-';
        else
            throw std::invalid_argument("to_sign_string: coefficients must all be +-1");
    }
    return out;
}

} // namespace digitseal
