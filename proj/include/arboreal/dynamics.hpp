#pragma once

#include "arboreal/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arboreal {

/// Raised by Galois-side operations when the basepoint lies on the
/// post-critical orbit (some adjusted-orbit value vanishes).
class DegenerateBasepoint : public std::domain_error {
public:
    explicit DegenerateBasepoint(std::size_t index)
        : std::domain_error("basepoint lies on the post-critical orbit (c_" + std::to_string(index) + " vanishes)"),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class VanishingOrbitValue : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// f = (x - a)^2 - b with basepoint alpha.
struct QuadPair {
    Rational a = 0;
    Rational b = 0;
    Rational alpha = 0;

    /// The pair (x^2 + c, beta).
    static QuadPair normal(const Rational& c, const Rational& beta) { return {Rational(0), Rational(-c), beta}; }
    /// "a,b,alpha" or "c,alpha" (normal form), rationals as p/q.
    static QuadPair parse(std::string_view text);

    Rational apply(const Rational& x) const;
    Rational iterate(const Rational& x, std::size_t n) const;
    const Rational& critical_point() const { return a; }
    std::string to_string() const;
};

struct NormalForm {
    Rational c;
    Rational beta;
    friend bool operator==(const NormalForm& x, const NormalForm& y) { return x.c == y.c && x.beta == y.beta; }
};

NormalForm normal_form(const QuadPair& p);

struct AdjustedOrbit {
    std::vector<Rational> raw;       // c_1 = -f(a), c_n = f^n(a)
    std::vector<Rational> adjusted;  // c_{1,alpha} = c_1 + alpha, c_{n,alpha} = c_n - alpha
    std::optional<std::size_t> degeneracy;  // least n with c_{n,alpha} = 0

    void require_nondegenerate() const {
        if (degeneracy) throw DegenerateBasepoint(*degeneracy);
    }
};

AdjustedOrbit adjusted_orbit(const QuadPair& p, std::size_t n);

/// Whether target = f^n(start) for some n >= first, with f = x^2 + c. Terminates
/// by cycle detection, the archimedean escape bound max(|c|, 2) or the
/// denominator blow-up at primes dividing the denominator of c.
bool in_forward_orbit(const Rational& c, const Rational& start, const Rational& target, std::size_t first = 1);

bool in_post_critical_orbit(const QuadPair& p);

struct PcfVerdict {
    enum class Witness { None, Denominator, Escape };

    bool pcf = false;
    // PCF: orbit of the critical point (normal form: of 0) enters a cycle of
    // length `period` after `preperiod` steps.
    std::size_t preperiod = 0;
    std::size_t period = 0;
    std::vector<Rational> orbit;  // z_0 = 0, z_1, ... up to the first repeat or the witness
    // PCI: first index n with a denominator (n = 1 when c itself has one) or with |z_n| > max(|c|, 2).
    Witness witness = Witness::None;
    std::size_t witness_index = 0;
};

PcfVerdict is_pcf(const Rational& c);
PcfVerdict is_pcf(const QuadPair& p);

struct ExceptionalVerdict {
    bool exceptional = false;
    /// Human-readable derivation of the closed-form test.
    std::string justification;
};

ExceptionalVerdict is_exceptional(const QuadPair& p);

struct ValuationReport {
    enum class Pattern { Negative, Rigid, NoPositive };

    Rational c;
    unsigned long prime = 0;
    std::vector<std::int64_t> valuations;  // v_p(c_n) for n = 1..N
    Pattern pattern = Pattern::NoPositive;
    std::size_t first_positive = 0;        // Rigid: least n with v_p(c_n) > 0
    bool conforms = false;
    std::vector<std::size_t> violations;   // indices breaking the pattern
};

/// p-adic valuations of the adjusted post-critical orbit of x^2 + c, checked
/// against the divisibility pattern. Throws VanishingOrbitValue.
ValuationReport orbit_valuations(const Rational& c, unsigned long p, std::size_t n);

}  // namespace arboreal
