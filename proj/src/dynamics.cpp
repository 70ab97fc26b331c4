#include "arboreal/dynamics.hpp"

#include "arboreal/factor.hpp"

#include <limits>
#include <map>

namespace arboreal {

namespace {

constexpr std::size_t kOrbitStepLimit = 100'000;

std::vector<std::string> split_commas(std::string_view text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        parts.emplace_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

unsigned long smallest_prime_factor(const Integer& n) {
    for (unsigned long p : small_primes()) {
        if (Integer(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return p;
    }
    if (!n.fits_ulong_p()) {
        FactorBudget budget;
        auto f = factor(n, budget);
        if (!f.front().first.fits_ulong_p()) throw std::overflow_error("denominator prime too large");
        return f.front().first.get_ui();
    }
    return n.get_ui();
}

}  // namespace

QuadPair QuadPair::parse(std::string_view text) {
    auto parts = split_commas(text);
    if (parts.size() == 2) return normal(parse_rational(parts[0]), parse_rational(parts[1]));
    if (parts.size() == 3) return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
    throw ParseError("pair must be 'a,b,alpha' or 'c,alpha': '" + std::string(text) + "'");
}

Rational QuadPair::apply(const Rational& x) const {
    Rational t = x - a;
    return t * t - b;
}

Rational QuadPair::iterate(const Rational& x, std::size_t n) const {
    Rational z = x;
    for (std::size_t i = 0; i < n; ++i) z = apply(z);
    return z;
}

std::string QuadPair::to_string() const {
    return "((x-" + a.get_str() + ")^2-" + b.get_str() + ", " + alpha.get_str() + ")";
}

NormalForm normal_form(const QuadPair& p) { return {Rational(-(p.a + p.b)), Rational(p.alpha - p.a)}; }

AdjustedOrbit adjusted_orbit(const QuadPair& p, std::size_t n) {
    if (n == 0) throw std::invalid_argument("orbit length must be positive");
    AdjustedOrbit out;
    out.raw.reserve(n);
    out.adjusted.reserve(n);
    Rational z = p.apply(p.a);
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == 1) {
            out.raw.push_back(-z);
            out.adjusted.push_back(Rational(-z + p.alpha));
        } else {
            z = p.apply(z);
            out.raw.push_back(z);
            out.adjusted.push_back(Rational(z - p.alpha));
        }
        if (!out.degeneracy && out.adjusted.back() == 0) out.degeneracy = i;
    }
    return out;
}

bool in_forward_orbit(const Rational& c, const Rational& start, const Rational& target, std::size_t first) {
    const Rational bound = abs_value(c) > 2 ? abs_value(c) : Rational(2);
    const Rational target_size = abs_value(target);
    unsigned long p = 0;
    std::int64_t vc = 0, vt = 0;
    if (c.get_den() != 1) {
        p = smallest_prime_factor(c.get_den());
        vc = valuation(c, p);
        vt = target == 0 ? std::numeric_limits<std::int64_t>::max() : valuation(target, p);
    }
    std::map<Rational, std::size_t> seen;
    Rational z = start;
    for (std::size_t n = 0; n < kOrbitStepLimit; ++n) {
        if (n >= first && z == target) return true;
        if (!seen.emplace(z, n).second) return false;
        if (abs_value(z) > bound && abs_value(z) > target_size) return false;
        if (p != 0 && z != 0) {
            std::int64_t vz = valuation(z, p);
            // From here v_p(f(z)) = 2 v_p(z) keeps decreasing.
            if (vz < 0 && 2 * vz < vc && vz < vt) return false;
        }
        z = z * z + c;
    }
    throw std::runtime_error("orbit search did not terminate");
}

bool in_post_critical_orbit(const QuadPair& p) {
    NormalForm nf = normal_form(p);
    return in_forward_orbit(nf.c, Rational(0), nf.beta, 1);
}

PcfVerdict is_pcf(const Rational& c) {
    PcfVerdict v;
    v.orbit.push_back(Rational(0));
    if (c.get_den() != 1) {
        v.orbit.push_back(c);
        v.witness = PcfVerdict::Witness::Denominator;
        v.witness_index = 1;
        return v;
    }
    const Rational bound = abs_value(c) > 2 ? abs_value(c) : Rational(2);
    std::map<Rational, std::size_t> seen{{Rational(0), 0}};
    Rational z = 0;
    for (std::size_t n = 1; n < kOrbitStepLimit; ++n) {
        z = z * z + c;
        auto [it, fresh] = seen.emplace(z, n);
        if (!fresh) {
            v.pcf = true;
            v.preperiod = it->second;
            v.period = n - it->second;
            return v;
        }
        v.orbit.push_back(z);
        if (abs_value(z) > bound) {
            Rational next = z * z + c;
            if (!(abs_value(next) > abs_value(z))) throw std::logic_error("escape bound violated");
            v.witness = PcfVerdict::Witness::Escape;
            v.witness_index = n;
            return v;
        }
    }
    throw std::runtime_error("PCF decision did not terminate");
}

PcfVerdict is_pcf(const QuadPair& p) { return is_pcf(normal_form(p).c); }

ExceptionalVerdict is_exceptional(const QuadPair& p) {
    NormalForm nf = normal_form(p);
    ExceptionalVerdict v;
    v.exceptional = nf.c == 0 && nf.beta == 0;
    v.justification =
        "normal form (x^2+c, beta): a finite backward orbit is totally invariant, so each of its points has a "
        "single preimage; only c does, with preimage 0, so the orbit is {0} = {c} and (c, beta) = (0, 0)";
    return v;
}

ValuationReport orbit_valuations(const Rational& c, unsigned long p, std::size_t n) {
    if (n == 0) throw std::invalid_argument("orbit length must be positive");
    if (n > 62) throw std::invalid_argument("orbit length too large for valuation pattern checks");
    ValuationReport r;
    r.c = c;
    r.prime = p;
    QuadPair f = QuadPair::normal(c, Rational(0));
    AdjustedOrbit orbit = adjusted_orbit(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (orbit.raw[i] == 0)
            throw VanishingOrbitValue("c_" + std::to_string(i + 1) + " vanishes for c = " + c.get_str());
        r.valuations.push_back(valuation(orbit.raw[i], p));
    }
    const std::int64_t v1 = r.valuations[0];
    if (v1 < 0) {
        r.pattern = ValuationReport::Pattern::Negative;
        for (std::size_t i = 0; i < n; ++i) {
            if (r.valuations[i] != (std::int64_t{1} << i) * v1) r.violations.push_back(i + 1);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (r.valuations[i] > 0) {
                r.first_positive = i + 1;
                break;
            }
        }
        if (r.first_positive == 0) {
            r.pattern = ValuationReport::Pattern::NoPositive;
            for (std::size_t i = 0; i < n; ++i) {
                if (r.valuations[i] != 0) r.violations.push_back(i + 1);
            }
        } else {
            r.pattern = ValuationReport::Pattern::Rigid;
            const std::int64_t top = r.valuations[r.first_positive - 1];
            for (std::size_t m = 1; m <= n; ++m) {
                std::int64_t expected = m % r.first_positive == 0 ? top : 0;
                if (r.valuations[m - 1] != expected) r.violations.push_back(m);
            }
        }
    }
    r.conforms = r.violations.empty();
    return r;
}

}  // namespace arboreal
