#pragma once

#include "arboreal/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace arboreal::modp {

/// Dense polynomial over F_p, coefficient i of x^i, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

/// q mod p, or nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce(const Rational& q, std::uint64_t p);

Poly trim(Poly f);
Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly rem(const Poly& f, const Poly& g, std::uint64_t p);
Poly quot(const Poly& f, const Poly& g, std::uint64_t p);
Poly gcd(Poly f, Poly g, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, std::uint64_t p);

/// Degrees of the irreducible factors of a squarefree polynomial, ascending.
std::vector<unsigned> factor_degrees(const Poly& f, std::uint64_t p);

bool is_squarefree(const Poly& f, std::uint64_t p);

}  // namespace arboreal::modp
