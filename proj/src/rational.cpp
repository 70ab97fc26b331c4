#include "arboreal/rational.hpp"

#include <cctype>

namespace arboreal {

namespace {

Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw ParseError("empty integer in '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

std::string_view trim(std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    // Accept the unicode minus sign that shows up when values are pasted from documents.
    std::string normalized;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.substr(i, 3) == "\xE2\x88\x92") {
            normalized.push_back('-');
            i += 2;
        } else {
            normalized.push_back(text[i]);
        }
    }
    std::string_view t = normalized;
    auto slash = t.find('/');
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(parse_integer(t));
    } else {
        Integer num = parse_integer(trim(t.substr(0, slash)));
        Integer den = parse_integer(trim(t.substr(slash + 1)));
        if (den == 0) throw ParseError("zero denominator in '" + normalized + "'");
        q = Rational(num, den);
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

std::int64_t valuation(const Integer& z, unsigned long p) {
    if (z == 0) throw std::domain_error("valuation of zero");
    Integer prime(p);
    Integer rest;
    mp_bitcnt_t v = mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t());
    return static_cast<std::int64_t>(v);
}

std::int64_t valuation(const Rational& q, unsigned long p) {
    if (q == 0) throw std::domain_error("valuation of zero");
    return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

Integer height(const Rational& q) {
    Integer n = abs(q.get_num());
    Integer d = q.get_den();
    return n > d ? n : d;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

bool is_square(const Integer& z) {
    if (z < 0) return false;
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

bool exact_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (!is_square(num) || !is_square(den)) return false;
    root = Rational(Integer(sqrt(num)), Integer(sqrt(den)));
    root.canonicalize();
    return true;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace arboreal
