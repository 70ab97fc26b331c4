#include "arboreal/dynamics.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace arboreal;

namespace {
Rational q(const char* s) { return parse_rational(s); }
QuadPair pair(const char* s) { return QuadPair::parse(s); }
std::vector<Rational> rs(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (auto x : xs) out.push_back(q(x));
    return out;
}
}  // namespace

TEST_CASE("pair parsing") {
    QuadPair p = pair("1,2,3");
    CHECK(p.a == 1);
    CHECK(p.b == 2);
    CHECK(p.alpha == 3);
    QuadPair n = pair("-1,-1/2");
    CHECK(n.a == 0);
    CHECK(n.b == 1);
    CHECK(n.alpha == q("-1/2"));
    CHECK_THROWS_AS(pair("1"), ParseError);
    CHECK_THROWS_AS(pair("1,2,3,4"), ParseError);
}

TEST_CASE("normal_form") {
    NormalForm nf = normal_form(pair("1,2,0"));
    CHECK(nf.c == -3);
    CHECK(nf.beta == -1);
    CHECK(normal_form(pair("5,7")) == NormalForm{5, 7});
}

TEST_CASE("normal form preserves the adjusted orbit termwise") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        QuadPair p{oracle::random_rational(rng, 9, 4, false), oracle::random_rational(rng, 9, 4, false),
                   oracle::random_rational(rng, 9, 4, false)};
        NormalForm nf = normal_form(p);
        auto a = adjusted_orbit(p, 8);
        auto b = adjusted_orbit(QuadPair::normal(nf.c, nf.beta), 8);
        CHECK(a.adjusted == b.adjusted);
        auto oracle_orbit = oracle::critical_orbit(nf.c, 8);
        for (std::size_t i = 0; i < 8; ++i)
            CHECK(b.adjusted[i] == (i == 0 ? Rational(oracle_orbit[0] + nf.beta) : Rational(oracle_orbit[i] - nf.beta)));
    }
}

TEST_CASE("adjusted_orbit examples") {
    CHECK(adjusted_orbit(pair("-1,-1/2"), 3).adjusted == rs({"1/2", "1/2", "-1/2"}));
    CHECK(adjusted_orbit(pair("-2,0"), 5).adjusted == rs({"2", "2", "2", "2", "2"}));
    CHECK(adjusted_orbit(pair("0,1"), 4).adjusted == rs({"1", "-1", "-1", "-1"}));
    auto deg = adjusted_orbit(pair("-1,0"), 4);
    REQUIRE(deg.degeneracy);
    CHECK(*deg.degeneracy == 2);
    CHECK_THROWS_AS(deg.require_nondegenerate(), DegenerateBasepoint);
}

TEST_CASE("post-critical orbit membership") {
    CHECK(in_post_critical_orbit(pair("0,0")));
    CHECK(in_post_critical_orbit(pair("-1,0")));
    CHECK_FALSE(in_post_critical_orbit(pair("-1,-1/2")));
    CHECK(in_post_critical_orbit(pair("-2,2")));
    CHECK_FALSE(in_post_critical_orbit(pair("1,3")));
    CHECK(in_post_critical_orbit(pair("1,26")));
}

TEST_CASE("is_pcf examples") {
    auto v = is_pcf(Rational(-1));
    CHECK(v.pcf);
    CHECK(v.preperiod == 0);
    CHECK(v.period == 2);
    auto e = is_pcf(Rational(1));
    CHECK_FALSE(e.pcf);
    CHECK(e.witness == PcfVerdict::Witness::Escape);
    CHECK(e.orbit.back() == 5);
    auto d = is_pcf(q("1/2"));
    CHECK_FALSE(d.pcf);
    CHECK(d.witness == PcfVerdict::Witness::Denominator);
    auto two = is_pcf(Rational(-2));
    CHECK(two.pcf);
    CHECK(two.preperiod == 2);
    CHECK(two.period == 1);
}

TEST_CASE("PCF certificates re-verify by iteration") {
    for (long c = -2; c <= 0; ++c) {
        auto v = is_pcf(Rational(c));
        REQUIRE(v.pcf);
        Rational z = 0;
        for (std::size_t i = 0; i < v.preperiod; ++i) z = z * z + c;
        Rational entry = z;
        for (std::size_t i = 0; i < v.period; ++i) z = z * z + c;
        CHECK(z == entry);
    }
}

TEST_CASE("is_pcf agrees with direct orbit iteration on small heights") {
    for (long num = -12; num <= 12; ++num)
        for (long den = 1; den <= 6; ++den) {
            Rational c{Integer(num), Integer(den)};
            c.canonicalize();
            CHECK(is_pcf(c).pcf == oracle::critical_orbit_finite(c));
        }
}

TEST_CASE("is_exceptional matches the preimage-count oracle") {
    CHECK(is_exceptional(pair("3,-3,3")).exceptional);
    CHECK_FALSE(is_exceptional(pair("0,1")).exceptional);
    CHECK_FALSE(is_exceptional(pair("-2,0")).exceptional);
    // A finite backward orbit means f^n - alpha has a single distinct root for all n.
    for (long a = -2; a <= 2; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long alpha = -3; alpha <= 3; ++alpha) {
                QuadPair p{a, b, alpha};
                bool single = true;
                for (unsigned n = 1; n <= 3 && single; ++n)
                    single = oracle::distinct_roots(oracle::iterate_poly(a, b, alpha, n)) == 1;
                CHECK(is_exceptional(p).exceptional == single);
            }
}

TEST_CASE("orbit_valuations examples") {
    auto r = orbit_valuations(q("1/2"), 2, 6);
    CHECK(r.pattern == ValuationReport::Pattern::Negative);
    CHECK(r.valuations == std::vector<std::int64_t>{-1, -2, -4, -8, -16, -32});
    CHECK(r.conforms);
    auto five = orbit_valuations(5, 2, 12);
    CHECK(five.pattern == ValuationReport::Pattern::Rigid);
    CHECK(five.first_positive == 2);
    for (std::size_t m = 1; m <= 12; ++m) CHECK(five.valuations[m - 1] == (m % 2 == 0 ? 1 : 0));
    CHECK(five.conforms);
    auto three = orbit_valuations(3, 3, 12);
    CHECK(three.first_positive == 1);
    CHECK(three.valuations == std::vector<std::int64_t>(12, 1));
    CHECK_THROWS_AS(orbit_valuations(-1, 3, 4), VanishingOrbitValue);
}
