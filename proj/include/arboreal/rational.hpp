#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arboreal {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// p-adic valuation of a nonzero integer or rational.
std::int64_t valuation(const Integer& z, unsigned long p);
std::int64_t valuation(const Rational& q, unsigned long p);

/// max(|numerator|, denominator)
Integer height(const Rational& q);

Rational abs_value(const Rational& q);

bool is_square(const Integer& z);
/// Exact rational square root when q is a square, else false.
bool exact_sqrt(const Rational& q, Rational& root);

bool is_prime(unsigned long n);

}  // namespace arboreal
