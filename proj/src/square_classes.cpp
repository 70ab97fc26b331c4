#include "arboreal/square_classes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace arboreal {

F2Vector SquareClass::to_vector() const {
    std::vector<Label> labels;
    if (sign < 0) labels.push_back(Label::sign());
    for (const auto& p : primes) labels.push_back(Label::prime(p));
    return F2Vector(std::move(labels));
}

SquareClass square_class(const Rational& q, FactorBudget& budget) {
    if (q == 0) throw std::domain_error("square_class of zero");
    SquareClass out;
    out.sign = q < 0 ? -1 : 1;
    // Same class as num/den.
    Integer n = q.get_num() * q.get_den();
    for (auto& [p, e] : factor(n, budget)) {
        if (e % 2 == 1) out.primes.push_back(p);
    }
    return out;
}

SquareCheck is_perfect_square(const Rational& q) {
    if (q == 0) return {true, true};
    return {is_square(q.get_num()) && is_square(q.get_den()), false};
}

bool all_valuations_even(const Rational& q) {
    if (q == 0) throw std::domain_error("all_valuations_even of zero");
    return is_square(Integer(abs(q.get_num()))) && is_square(q.get_den());
}

CoprimeBase coprime_base(const std::vector<Integer>& values) {
    std::vector<Integer> work;
    for (const auto& v : values) {
        if (v == 0) throw std::domain_error("coprime_base of zero");
        Integer a = abs(v);
        if (a > 1) work.push_back(a);
    }
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());

    // Factor refinement: split any non-coprime pair (x, y) into x/g, g, y/g.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                Integer g = gcd(work[i], work[j]);
                if (g == 1) continue;
                Integer x = work[i] / g;
                Integer y = work[j] / g;
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                for (Integer* z : {&x, &g, &y}) {
                    if (*z > 1) work.push_back(*z);
                }
                std::sort(work.begin(), work.end());
                work.erase(std::unique(work.begin(), work.end()), work.end());
                changed = true;
            }
        }
    }

    CoprimeBase out;
    out.base = work;
    std::vector<bool> square(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) square[i] = is_square(work[i]);
    for (const auto& v : values) {
        std::vector<Label> labels;
        if (v < 0) labels.push_back(Label::sign());
        Integer rest = abs(v);
        for (std::size_t i = 0; i < work.size() && rest > 1; ++i) {
            mp_bitcnt_t e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), work[i].get_mpz_t());
            if (e % 2 == 1 && !square[i]) labels.push_back(Label::base(i));
        }
        if (rest != 1) throw std::logic_error("coprime_base: value does not factor over the base");
        out.vectors.emplace_back(std::move(labels));
    }
    return out;
}

std::vector<F2Vector> class_vectors(const std::vector<Rational>& values) {
    std::vector<Integer> ints;
    ints.reserve(values.size());
    for (const auto& q : values) {
        if (q == 0) throw std::domain_error("class of zero");
        ints.push_back(q.get_num() * q.get_den());
    }
    return coprime_base(ints).vectors;
}

std::size_t span_dimension_by_factoring(const std::vector<Rational>& values, FactorBudget& budget) {
    F2Eliminator e;
    for (const auto& q : values) e.insert(square_class(q, budget).to_vector());
    return e.rank();
}

std::size_t span_dimension_by_coprime_base(const std::vector<Rational>& values) {
    return rank(class_vectors(values));
}

std::size_t span_dimension(const std::vector<Rational>& values, FactorBudget budget) {
    try {
        return span_dimension_by_factoring(values, budget);
    } catch (const BudgetExceeded&) {
        return span_dimension_by_coprime_base(values);
    }
}

std::string QuadElement::to_string() const {
    std::string s = a.get_str();
    if (b >= 0) s += "+";
    s += b.get_str() + "*sqrt(" + std::to_string(d) + ")";
    return s;
}

namespace {

void require_same_field(const QuadElement& x, const QuadElement& y) {
    if (x.d != y.d) throw std::invalid_argument("quadratic elements from different fields");
}

}  // namespace

QuadElement operator*(const QuadElement& x, const QuadElement& y) {
    require_same_field(x, y);
    Rational d(static_cast<long>(x.d));
    return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
}

QuadElement operator+(const QuadElement& x, const QuadElement& y) {
    require_same_field(x, y);
    return {x.a + y.a, x.b + y.b, x.d};
}

QuadElement operator-(const QuadElement& x, const QuadElement& y) {
    require_same_field(x, y);
    return {x.a - y.a, x.b - y.b, x.d};
}

std::pair<std::int64_t, Rational> squarefree_decomposition(const Rational& r, FactorBudget& budget) {
    SquareClass cls = square_class(r, budget);
    Integer d = cls.sign;
    for (const auto& p : cls.primes) d *= p;
    if (!d.fits_slong_p()) throw std::overflow_error("squarefree part does not fit in 64 bits");
    Rational t;
    Rational t2 = r / Rational(d);
    if (!exact_sqrt(t2, t)) throw std::logic_error("squarefree_decomposition: cofactor is not a square");
    return {d.get_si(), t};
}

std::optional<std::pair<Rational, Rational>> is_square_in_quad(const QuadElement& x) {
    if (x.is_zero()) throw std::domain_error("is_square_in_quad of zero");
    Rational d(static_cast<long>(x.d));
    Rational u, v;
    if (x.b == 0) {
        if (exact_sqrt(x.a, u)) return std::make_pair(u, Rational(0));
        if (exact_sqrt(x.a / d, v)) return std::make_pair(Rational(0), v);
        return std::nullopt;
    }
    Rational n;
    if (!exact_sqrt(x.norm(), n)) return std::nullopt;
    for (const Rational& s : {n, Rational(-n)}) {
        Rational u2 = (x.a + s) / 2;
        if (u2 == 0 || !exact_sqrt(u2, u)) continue;
        v = x.b / (2 * u);
        QuadElement w{u, v, x.d};
        if (w * w == x) return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::size_t quad_independent(const std::vector<QuadElement>& xs) {
    const std::size_t m = xs.size();
    if (m == 0) return 0;
    if (m > 16) throw std::invalid_argument("quad_independent is exponential; at most 16 elements");
    for (const auto& x : xs) {
        if (x.d != xs.front().d) throw std::invalid_argument("quad_independent: mixed fields");
        if (x.is_zero()) throw std::domain_error("quad_independent: zero element");
    }
    const std::size_t subsets = std::size_t{1} << m;
    std::vector<QuadElement> product(subsets);
    product[0] = {Rational(1), Rational(0), xs.front().d};
    std::size_t squares = 1;  // empty product
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
        product[mask] = product[mask & (mask - 1)] * xs[low];
        if (is_square_in_quad(product[mask])) ++squares;
    }
    // The square subsets form a subspace of size 2^(m - rank).
    return m - static_cast<std::size_t>(std::countr_zero(squares));
}

}  // namespace arboreal
