#include "arboreal/square_classes.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace arboreal;

namespace {
Rational q(const char* s) { return parse_rational(s); }

std::pair<int, std::vector<unsigned long>> as_pair(const SquareClass& s) {
    std::vector<unsigned long> ps;
    for (const auto& p : s.primes) ps.push_back(p.get_ui());
    return {s.sign, ps};
}
}  // namespace

TEST_CASE("parse_rational") {
    CHECK(q("-3/6") == Rational(-1, 2));
    CHECK(q("\xE2\x88\x92" "2") == -2);
    CHECK_THROWS_AS(q("1/0"), ParseError);
    CHECK_THROWS_AS(q("abc"), ParseError);
    CHECK(to_string(q("4/2")) == "2");
}

TEST_CASE("square_class examples") {
    FactorBudget b;
    CHECK(as_pair(square_class(18, b)) == std::pair<int, std::vector<unsigned long>>{1, {2}});
    CHECK(as_pair(square_class(q("-1/2"), b)) == std::pair<int, std::vector<unsigned long>>{-1, {2}});
    CHECK(square_class(q("4/9"), b).is_trivial());
    CHECK_THROWS(square_class(0, b));
}

TEST_CASE("square_class matches naive trial division") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        Rational x = oracle::random_rational(rng, 100000, 3000);
        FactorBudget b;
        CHECK(as_pair(square_class(x, b)) == oracle::square_class_naive(x));
    }
}

TEST_CASE("square_class handles a large semiprime via rho") {
    FactorBudget b;
    Integer p("1000000007"), r("998244353");
    SquareClass s = square_class(Rational(p * r * 4), b);
    CHECK(s.primes == std::vector<Integer>{r, p});
}

TEST_CASE("factorization budget is enforced") {
    FactorBudget tiny;
    tiny.operations = 10;
    Integer p("1000000007"), r("998244353");
    CHECK_THROWS_AS(square_class(Rational(p * r), tiny), BudgetExceeded);
}

TEST_CASE("is_perfect_square and valuations") {
    CHECK(is_perfect_square(q("49/4")).square);
    CHECK_FALSE(is_perfect_square(2).square);
    CHECK(is_perfect_square(Rational(2 * 2)).square);
    CHECK(is_perfect_square(0).degenerate);
    CHECK(all_valuations_even(49));
    CHECK(all_valuations_even(-49));
    CHECK_FALSE(all_valuations_even(8));
}

TEST_CASE("coprime_base examples") {
    auto cb = coprime_base({Integer(6), Integer(10)});
    CHECK(cb.base == std::vector<Integer>{2, 3, 5});
    CHECK(cb.vectors[0] == F2Vector{Label::base(0), Label::base(1)});
    CHECK(cb.vectors[1] == F2Vector{Label::base(0), Label::base(2)});
    CHECK(coprime_base({Integer(4)}).vectors[0].empty());
    CHECK(coprime_base({Integer(-1)}).vectors[0] == F2Vector{Label::sign()});
}

TEST_CASE("coprime base elements are pairwise coprime and generate the values") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        std::vector<Integer> vals;
        for (int i = 0; i < 5; ++i) vals.push_back(Integer(static_cast<long>(rng() % 5000) + 1) * ((rng() & 1) ? 1 : -1));
        auto cb = coprime_base(vals);
        for (std::size_t i = 0; i < cb.base.size(); ++i) {
            CHECK(cb.base[i] > 1);
            for (std::size_t j = i + 1; j < cb.base.size(); ++j) CHECK(gcd(cb.base[i], cb.base[j]) == 1);
        }
    }
}

TEST_CASE("span_dimension examples") {
    CHECK(span_dimension({2, 2, 2, 2}) == 1);
    CHECK(span_dimension({2, -1}) == 2);
    std::vector<Rational> orbit{-1, 2, 5, 26, 677, 458330};
    CHECK(span_dimension(orbit) == 6);
    CHECK(oracle::subset_rank(orbit) == 6);
    FactorBudget b;
    CHECK(span_dimension_by_factoring(orbit, b) == span_dimension_by_coprime_base(orbit));
}

TEST_CASE("span_dimension matches the subset-product oracle") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        std::vector<Rational> vals;
        const int m = 1 + static_cast<int>(rng() % 7);
        for (int i = 0; i < m; ++i) vals.push_back(oracle::random_rational(rng, 60, 12));
        CHECK(span_dimension_by_coprime_base(vals) == oracle::subset_rank(vals));
    }
}

TEST_CASE("quadratic field elements") {
    QuadElement one_plus{1, 1, 2}, minus_root{0, -1, 2};
    CHECK_FALSE(is_square_in_quad(one_plus));
    CHECK_FALSE(is_square_in_quad(minus_root));
    auto w = is_square_in_quad(QuadElement{3, 2, 2});
    REQUIRE(w);
    QuadElement root{w->first, w->second, 2};
    CHECK(root * root == QuadElement{3, 2, 2});
    CHECK(quad_independent({one_plus, minus_root}) == 2);
    CHECK(quad_independent({QuadElement{3, 2, 2}}) == 0);
    // 2 = (sqrt 2)^2 is a square in Q(sqrt 2), so only -1 survives.
    CHECK(quad_independent({QuadElement{2, 0, 2}, QuadElement{-1, 0, 2}}) == 1);
    CHECK(quad_independent({QuadElement{3, 0, 2}, QuadElement{-1, 0, 2}}) == 2);
}

TEST_CASE("is_square_in_quad agrees with squaring random elements") {
    std::mt19937_64 rng(9);
    for (std::int64_t d : {2, 3, 5, -1, -7}) {
        for (int t = 0; t < 100; ++t) {
            QuadElement x{oracle::random_rational(rng, 20, 5, false), oracle::random_rational(rng, 20, 5), d};
            QuadElement sq = x * x;
            auto w = is_square_in_quad(sq);
            REQUIRE(w);
            QuadElement r{w->first, w->second, d};
            CHECK(r * r == sq);
        }
    }
}

TEST_CASE("squarefree_decomposition") {
    FactorBudget b;
    auto [d, t] = squarefree_decomposition(q("8/3"), b);
    CHECK(d == 6);
    CHECK(t * t * d == q("8/3"));
}
