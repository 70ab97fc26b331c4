#include "arboreal/galois.hpp"

#include "arboreal/modp.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace arboreal;

namespace {
Rational q(const char* s) { return parse_rational(s); }
QuadPair pair(const char* s) { return QuadPair::parse(s); }

bool contains(const std::vector<GroupId>& gs, GroupId g) { return std::find(gs.begin(), gs.end(), g) != gs.end(); }

// Cycle type of f^2 - alpha mod p from the explicit root count of its quadratic
// factors over F_p: counts roots of y^2 = d for each root d of the resolvent.
std::size_t roots_mod_p(const QuadPair& f, unsigned level, std::uint64_t p) {
    std::size_t count = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        Rational v = f.iterate(Rational(Integer(static_cast<unsigned long>(x))), level) - f.alpha;
        if (*modp::reduce(v, p) == 0) ++count;
    }
    return count;
}
}  // namespace

TEST_CASE("contained_in_Mv examples") {
    CHECK(contained_in_Mv(pair("-2,0"), IndexVector{1, 2}));
    CHECK_FALSE(contained_in_Mv(pair("-1,1"), IndexVector{1}));
    CHECK(contained_in_Mv(pair("5,7"), IndexVector{}));
    CHECK_THROWS_AS(contained_in_Mv(pair("-1,0"), IndexVector{1, 2}), DegenerateBasepoint);
}

TEST_CASE("v = {1} containment is reducibility of f - alpha") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 300; ++t) {
        QuadPair p{oracle::random_rational(rng, 6, 3, false), oracle::random_rational(rng, 6, 3, false),
                   oracle::random_rational(rng, 6, 3, false)};
        if (adjusted_orbit(p, 2).degeneracy) continue;
        // f - alpha = x^2 - 2a x + (a^2 - b - alpha).
        bool reducible = oracle::quadratic_has_rational_root(-2 * p.a, p.a * p.a - p.b - p.alpha);
        CHECK(contained_in_Mv(p, IndexVector{1}) == reducible);
    }
}

TEST_CASE("ab_dimension examples") {
    CHECK(ab_dimension(pair("-2,0"), 10) == 1);
    CHECK(ab_dimension(pair("-1,-1/2"), 3) == 2);
    CHECK(ab_dimension(pair("1,0"), 6) == 6);
}

TEST_CASE("level2_galois examples") {
    CHECK(level2_galois(pair("-1,1")).group == GroupId::D8);
    CHECK(level2_galois(pair("-1,-2")).group == GroupId::D8);
    CHECK(level2_galois(pair("-2,0")).group == GroupId::C4);
    CHECK(level2_galois(pair("1,0")).group == GroupId::D8);
    CHECK(level2_galois(pair("0,1")).group == GroupId::C2);
    CHECK(level2_galois(pair("0,16")).group == GroupId::C2);   // x^4 - 16 = (x-2)(x+2)(x^2+4)
    CHECK(level2_galois(pair("-5,-1")).group == GroupId::V4);  // roots +-sqrt 7, +-sqrt 3
    CHECK(level2_galois(pair("-5,4")).group == GroupId::C2);   // roots +-sqrt 8, +-sqrt 2
    CHECK(level2_galois(pair("-17,47")).group == GroupId::C1);   // x^4 - 34x^2 + 225 = (x^2-9)(x^2-25)
    CHECK_THROWS_AS(level2_galois(pair("-1,0")), DegenerateBasepoint);
}

TEST_CASE("level2_galois order equals the number of Frobenius classes needed (root-count oracle)") {
    // The number of rational roots of f^2 - alpha equals the number of fixed leaves
    // of the identity-like Frobenius; a group with all roots rational is C1.
    auto g = level2_galois(pair("-17,47"));
    CHECK(g.group == GroupId::C1);
    for (std::uint64_t p : {7ul, 11ul, 13ul, 19ul}) CHECK(roots_mod_p(pair("-17,47"), 2, p) == 4);
}

TEST_CASE("level2 groups are consistent with Frobenius sampling on random pairs") {
    std::mt19937_64 rng(21);
    auto primes = odd_primes(150);
    for (int t = 0; t < 60; ++t) {
        QuadPair p = QuadPair::normal(oracle::random_rational(rng, 12, 3, false), oracle::random_rational(rng, 12, 3, false));
        if (adjusted_orbit(p, 2).degeneracy) continue;
        auto g = level2_galois(p);
        auto s = frobenius_sample(p, 2, primes);
        CHECK(contains(s.compatible, g.group));
        // Cross-check factor degrees with the explicit root count at a few primes.
        for (std::size_t i = 0; i < 10 && i < s.primes_used.size(); ++i) {
            std::uint64_t pr = s.primes_used[i];
            auto poly_roots = roots_mod_p(p, 2, pr);
            auto serial = frobenius_sample_serial(p, 2, {pr});
            const auto& type = serial.counts.begin()->first;
            CHECK(static_cast<std::size_t>(std::count(type.begin(), type.end(), 1u)) == poly_roots);
        }
    }
}

TEST_CASE("predicted_in_Mv matches contained_in_Mv") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        QuadPair p = QuadPair::normal(oracle::random_rational(rng, 10, 4, false), oracle::random_rational(rng, 10, 4, false));
        if (adjusted_orbit(p, 2).degeneracy) continue;
        auto g = level2_galois(p);
        for (auto v : {IndexVector{1}, IndexVector{2}, IndexVector{1, 2}}) CHECK(predicted_in_Mv(g, v) == contained_in_Mv(p, v));
    }
}

TEST_CASE("frobenius_sample examples") {
    auto primes = odd_primes(100);
    auto c4 = frobenius_sample(pair("-2,0"), 2, primes);
    for (const auto& [type, n] : c4.counts) CHECK(type != CycleType{1, 1, 2});
    CHECK(contains(c4.compatible, GroupId::C4));
    CHECK(c4.saturated == std::vector<GroupId>{GroupId::C4});
    auto d8 = frobenius_sample(pair("1,0"), 2, primes);
    CHECK(d8.counts.count(CycleType{1, 1, 2}));
    CHECK(d8.compatible == std::vector<GroupId>{GroupId::D8});
    auto c2 = frobenius_sample(pair("0,1"), 2, primes);
    CHECK(contains(c2.compatible, GroupId::C2));
    auto serial = frobenius_sample_serial(pair("1,0"), 2, primes);
    CHECK(serial.counts == d8.counts);
    CHECK(serial.primes_used == d8.primes_used);
    auto level3 = frobenius_sample(pair("1,0"), 3, primes);
    std::size_t total = 0;
    for (const auto& [type, n] : level3.counts) {
        CHECK(std::accumulate(type.begin(), type.end(), 0u) == 8u);
        total += n;
    }
    CHECK(total == level3.primes_used.size());
}

TEST_CASE("poonen_check examples") {
    auto a = poonen_check(-1, q("1/3"), 3);
    CHECK(a.fired);
    CHECK(a.condition == 'a');
    auto b = poonen_check(-1, 2, 3);
    CHECK(b.fired);
    CHECK(b.condition == 'b');
    CHECK_FALSE(poonen_check(1, 5, 3).fired);
    CHECK_THROWS(poonen_check(-1, 2, 2));
    CHECK_THROWS(poonen_check(q("1/3"), 2, 3));
}

TEST_CASE("nonabelian_prime_search examples") {
    auto a = nonabelian_prime_search(pair("-1,1/3"), 100);
    REQUIRE(a);
    CHECK(a->prime == 3);
    CHECK(a->condition == 'a');
    auto b = nonabelian_prime_search(pair("-5,5"), 100);
    REQUIRE(b);
    CHECK(b->prime == 5);
    CHECK(b->condition == 'b');
    CHECK_FALSE(nonabelian_prime_search(pair("-2,1"), 1000));
    for (const char* ab : {"0,1", "0,-1", "-2,0", "-2,-1", "-2,2", "-2,-2"}) CHECK_FALSE(nonabelian_prime_search(pair(ab), 1000));
}

TEST_CASE("classify_abelian examples") {
    auto v = classify_abelian(pair("-2,1"));
    CHECK(v.status == AbelianVerdict::Status::Abelian);
    auto fn = classify_abelian(pair("-1,-1/2"));
    REQUIRE(fn.status == AbelianVerdict::Status::NonAbelian);
    REQUIRE(fn.certificate);
    CHECK(fn.certificate->kind == Certificate::Kind::FaithfulNode2Dim);
    CHECK(fn.certificate->values == std::vector<Rational>{q("1/2"), q("1/2"), q("-1/2")});
    auto qd = classify_abelian(pair("-1,0"));
    REQUIRE(qd.certificate);
    CHECK(qd.certificate->kind == Certificate::Kind::QuadFieldD8);
    CHECK(qd.certificate->quad_values[0] == QuadElement{1, 1, 2});
    CHECK(qd.certificate->quad_values[1] == QuadElement{0, -1, 2});
    CHECK(classify_abelian(pair("0,0")).status == AbelianVerdict::Status::NotApplicable);
    auto l2 = classify_abelian(pair("-1,1"));
    REQUIRE(l2.certificate);
    CHECK(l2.certificate->kind == Certificate::Kind::Level2D8);
}

TEST_CASE("every NonAbelian certificate replays, tampered ones do not") {
    std::size_t replays = 0;
    for (long cn = -6; cn <= 6; ++cn)
        for (long cd = 1; cd <= 3; ++cd)
            for (long bn = -6; bn <= 6; ++bn)
                for (long bd = 1; bd <= 2; ++bd) {
                    Rational c{Integer(cn), Integer(cd)}, beta{Integer(bn), Integer(bd)};
                    c.canonicalize();
                    beta.canonicalize();
                    auto v = classify_abelian(QuadPair::normal(c, beta));
                    if (!v.certificate) continue;
                    REQUIRE(replay(*v.certificate));
                    ++replays;
                    Certificate bad = *v.certificate;
                    bad.beta += 1;
                    if (bad.kind != Certificate::Kind::PostCriticallyInfinite) CHECK_FALSE(replay(bad));
                }
    CHECK(replays > 500);
}

TEST_CASE("abelian verdicts only for PCF maps") {
    for (long cn = -8; cn <= 8; ++cn)
        for (long bn = -8; bn <= 8; ++bn) {
            auto v = classify_abelian(QuadPair::normal(cn, bn));
            if (v.status == AbelianVerdict::Status::Abelian) CHECK(is_pcf(Rational(cn)).pcf);
        }
}
