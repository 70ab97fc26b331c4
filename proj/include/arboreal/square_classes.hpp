#pragma once

#include "arboreal/f2_vector.hpp"
#include "arboreal/factor.hpp"
#include "arboreal/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace arboreal {

/// Image of a nonzero rational in Q*/Q*^2.
struct SquareClass {
    int sign = 1;
    std::vector<Integer> primes;  // sorted, distinct

    bool is_trivial() const { return sign == 1 && primes.empty(); }
    F2Vector to_vector() const;
    friend bool operator==(const SquareClass& a, const SquareClass& b) {
        return a.sign == b.sign && a.primes == b.primes;
    }
};

SquareClass square_class(const Rational& q, FactorBudget& budget);

struct SquareCheck {
    bool square = false;
    /// Set when the input was zero; callers must not read that as a square class.
    bool degenerate = false;
    explicit operator bool() const { return square; }
};

SquareCheck is_perfect_square(const Rational& q);

/// True iff every p-adic valuation of q is even, i.e. q = +-r^2.
bool all_valuations_even(const Rational& q);

struct CoprimeBase {
    std::vector<Integer> base;       // pairwise coprime, > 1, ascending
    std::vector<F2Vector> vectors;   // Sign / Base(i) labels; square base elements never appear
};

CoprimeBase coprime_base(const std::vector<Integer>& values);

/// Span dimension of the classes of `values` in Q*/Q*^2.
std::size_t span_dimension_by_factoring(const std::vector<Rational>& values, FactorBudget& budget);
std::size_t span_dimension_by_coprime_base(const std::vector<Rational>& values);
/// Factors when the budget allows, else falls back to the coprime base.
std::size_t span_dimension(const std::vector<Rational>& values, FactorBudget budget = {});

/// Class vectors over a coprime base built from all values jointly; usable for
/// any span or in-span question without factoring.
std::vector<F2Vector> class_vectors(const std::vector<Rational>& values);

/// a + b*sqrt(d), d squarefree and not in {0, 1}.
struct QuadElement {
    Rational a;
    Rational b;
    std::int64_t d = 2;

    bool is_zero() const { return a == 0 && b == 0; }
    Rational norm() const { return a * a - Rational(d) * b * b; }
    std::string to_string() const;
    friend bool operator==(const QuadElement& x, const QuadElement& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
};

QuadElement operator*(const QuadElement& x, const QuadElement& y);
QuadElement operator+(const QuadElement& x, const QuadElement& y);
QuadElement operator-(const QuadElement& x, const QuadElement& y);

/// Squarefree integer d and rational t with r = t^2 * d. Requires r != 0.
std::pair<std::int64_t, Rational> squarefree_decomposition(const Rational& r, FactorBudget& budget);

std::optional<std::pair<Rational, Rational>> is_square_in_quad(const QuadElement& x);

/// Rank of the span of xs in Q(sqrt d)*/squares via all subset products.
std::size_t quad_independent(const std::vector<QuadElement>& xs);

}  // namespace arboreal
