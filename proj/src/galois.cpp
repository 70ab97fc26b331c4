#include "arboreal/galois.hpp"

#include "arboreal/modp.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace arboreal {

std::string to_string(GroupId g) {
    switch (g) {
        case GroupId::C1: return "C1";
        case GroupId::C2: return "C2";
        case GroupId::V4: return "V4";
        case GroupId::C4: return "C4";
        case GroupId::D8: return "D8";
    }
    return "?";
}

unsigned order(GroupId g) {
    switch (g) {
        case GroupId::C1: return 1;
        case GroupId::C2: return 2;
        case GroupId::V4:
        case GroupId::C4: return 4;
        case GroupId::D8: return 8;
    }
    return 0;
}

bool is_abelian(GroupId g) { return g != GroupId::D8; }

bool contained_in_Mv(const QuadPair& p, const IndexVector& v) {
    if (v.is_zero()) return true;
    AdjustedOrbit orbit = adjusted_orbit(p, v.max_index());
    orbit.require_nondegenerate();
    Rational product = 1;
    for (auto i : v.support()) product *= orbit.adjusted[i - 1];
    return is_perfect_square(product).square;
}

std::size_t ab_dimension(const QuadPair& p, std::size_t n, FactorBudget budget) {
    AdjustedOrbit orbit = adjusted_orbit(p, n);
    orbit.require_nondegenerate();
    return span_dimension(orbit.adjusted, budget);
}

Level2Group level2_galois(const QuadPair& p, FactorBudget budget) {
    NormalForm nf = normal_form(p);
    const Rational& c = nf.c;
    Level2Group out;
    out.c1 = nf.beta - c;
    out.c2 = c * c + c - nf.beta;
    if (out.c1 == 0) throw DegenerateBasepoint(1);
    if (out.c2 == 0) throw DegenerateBasepoint(2);

    // f^2(x) - beta = (x^2 + c - d+)(x^2 + c - d-)... in y = x^2 the roots are
    // y = -c +- sqrt(c1), and their product is c2.
    Rational s;
    if (exact_sqrt(out.c1, s)) {
        Rational dp = -c + s;
        Rational dm = -c - s;
        bool sq_p = is_perfect_square(dp).square;
        bool sq_m = is_perfect_square(dm).square;
        bool same = is_perfect_square(Rational(dp * dm)).square;
        std::size_t r = rank(class_vectors({dp, dm}));
        out.group = r == 0 ? GroupId::C1 : r == 1 ? GroupId::C2 : GroupId::V4;
        std::set<std::array<bool, 2>> image;
        for (int ep = 0; ep < 2; ++ep) {
            for (int em = 0; em < 2; ++em) {
                if (sq_p && ep) continue;
                if (sq_m && em) continue;
                if (same && ep != em) continue;
                image.insert({false, ep != em});
            }
        }
        out.ab_image.assign(image.begin(), image.end());
        return out;
    }

    out.root_swapping = true;
    auto [d, t] = squarefree_decomposition(out.c1, budget);
    QuadElement d_plus{Rational(-c), t, d};
    if (is_square_in_quad(d_plus)) {
        out.group = GroupId::C2;
        out.ab_image = {{false, false}, {true, false}};
    } else if (is_perfect_square(out.c2).square) {
        out.group = GroupId::V4;
        out.ab_image = {{false, false}, {true, false}};
    } else if (is_perfect_square(Rational(out.c1 * out.c2)).square) {
        out.group = GroupId::C4;
        out.ab_image = {{false, false}, {true, true}};
    } else {
        out.group = GroupId::D8;
        out.ab_image = {{false, false}, {false, true}, {true, false}, {true, true}};
    }
    return out;
}

bool predicted_in_Mv(const Level2Group& g, const IndexVector& v) {
    if (v.max_index() > 2) throw std::out_of_range("level-2 prediction only covers indices 1 and 2");
    for (const auto& e : g.ab_image) {
        bool s = false;
        for (auto i : v.support()) s ^= e[i - 1];
        if (s) return false;
    }
    return true;
}

namespace {

using TypeSet = std::set<CycleType>;

const std::vector<std::pair<GroupId, std::vector<TypeSet>>>& level2_realizations() {
    static const CycleType id{1, 1, 1, 1}, dbl{2, 2}, tr{1, 1, 2}, four{4};
    static const std::vector<std::pair<GroupId, std::vector<TypeSet>>> table = {
        {GroupId::C1, {{id}}},
        {GroupId::C2, {{id, dbl}, {id, tr}}},
        {GroupId::V4, {{id, dbl}, {id, tr, dbl}}},
        {GroupId::C4, {{id, dbl, four}}},
        {GroupId::D8, {{id, dbl, four, tr}}},
    };
    return table;
}

// f^level - alpha over F_p, or nullopt at a bad prime.
std::optional<modp::Poly> reduce_iterate(const QuadPair& f, unsigned level, std::uint64_t p) {
    if (p == 2) return std::nullopt;
    auto a = modp::reduce(f.a, p);
    auto b = modp::reduce(f.b, p);
    auto alpha = modp::reduce(f.alpha, p);
    if (!a || !b || !alpha) return std::nullopt;
    modp::Poly poly{0, 1};
    for (unsigned i = 0; i < level; ++i) {
        modp::Poly shifted = modp::sub(poly, modp::Poly{*a}, p);
        poly = modp::sub(modp::mul(shifted, shifted, p), modp::Poly{*b}, p);
    }
    poly = modp::sub(poly, modp::Poly{*alpha}, p);
    if (!modp::is_squarefree(poly, p)) return std::nullopt;
    return poly;
}

void finish_sample(FrobeniusSample& s) {
    if (s.primes_used.empty()) throw std::invalid_argument("frobenius_sample: no good primes supplied");
    if (s.level != 2) return;
    TypeSet observed;
    for (const auto& [type, n] : s.counts) observed.insert(type);
    for (const auto& [group, realizations] : level2_realizations()) {
        bool covers = false, equals = false;
        for (const auto& r : realizations) {
            covers = covers || std::includes(r.begin(), r.end(), observed.begin(), observed.end());
            equals = equals || r == observed;
        }
        if (covers) s.compatible.push_back(group);
        if (equals) s.saturated.push_back(group);
    }
}

void check_level(unsigned level) {
    if (level < 1 || level > 3) throw std::invalid_argument("frobenius_sample supports levels 1..3");
}

}  // namespace

FrobeniusSample frobenius_sample_serial(const QuadPair& p, unsigned level, const std::vector<unsigned long>& primes) {
    check_level(level);
    FrobeniusSample s;
    s.level = level;
    for (auto prime : primes) {
        auto poly = reduce_iterate(p, level, prime);
        if (!poly) {
            s.primes_skipped.push_back(prime);
            continue;
        }
        s.primes_used.push_back(prime);
        ++s.counts[modp::factor_degrees(*poly, prime)];
    }
    finish_sample(s);
    return s;
}

FrobeniusSample frobenius_sample(const QuadPair& p, unsigned level, const std::vector<unsigned long>& primes) {
    check_level(level);
    const std::int64_t n = static_cast<std::int64_t>(primes.size());
    std::vector<std::optional<CycleType>> types(primes.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
        auto poly = reduce_iterate(p, level, primes[i]);
        if (poly) types[i] = modp::factor_degrees(*poly, primes[i]);
    }
    FrobeniusSample s;
    s.level = level;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!types[i]) {
            s.primes_skipped.push_back(primes[i]);
            continue;
        }
        s.primes_used.push_back(primes[i]);
        ++s.counts[*types[i]];
    }
    finish_sample(s);
    return s;
}

std::vector<unsigned long> odd_primes(std::size_t count) {
    std::vector<unsigned long> out;
    for (unsigned long p : small_primes()) {
        if (out.size() == count) break;
        if (p != 2) out.push_back(p);
    }
    if (out.size() < count) throw std::out_of_range("odd_primes: request beyond the sieve");
    return out;
}

namespace {

void require_odd_integral(const Rational& c, unsigned long p) {
    if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("poonen_check needs an odd prime");
    if (c != 0 && valuation(c, p) < 0) throw std::invalid_argument("poonen_check needs v_p(c) >= 0");
}

// Orbit of 0 under z -> z^2 + c mod p and whether it returns to 0.
std::pair<std::set<std::uint64_t>, bool> orbit_of_zero_mod(const Rational& c, unsigned long p) {
    std::uint64_t cm = *modp::reduce(c, p);
    std::set<std::uint64_t> orbit{0};
    std::uint64_t z = 0;
    for (unsigned long i = 0; i <= p; ++i) {
        z = (z * z + cm) % p;
        if (z == 0) return {orbit, true};
        if (!orbit.insert(z).second) return {orbit, false};
    }
    return {orbit, false};
}

}  // namespace

PoonenResult poonen_check(const Rational& c, const Rational& alpha, unsigned long p) {
    require_odd_integral(c, p);
    if (alpha != 0 && valuation(alpha, p) < 0) return {true, 'a'};
    auto [orbit, periodic] = orbit_of_zero_mod(c, p);
    if (!periodic) return {};
    if (!orbit.count(*modp::reduce(alpha, p))) return {};
    if (in_forward_orbit(c, Rational(0), alpha, 0)) return {};
    return {true, 'b'};
}

PoonenResult poonen_check_sqrt(const Rational& c, const Rational& r, unsigned long p) {
    require_odd_integral(c, p);
    if (r == 0 || is_perfect_square(r).square) throw std::invalid_argument("poonen_check_sqrt needs a non-square radicand");
    std::int64_t v = valuation(r, p);
    if (v < 0) return {true, 'a'};
    // sqrt(r) reduces to 0, which lies on the orbit of 0; being irrational it
    // cannot lie on the rational global orbit.
    if (v > 0 && orbit_of_zero_mod(c, p).second) return {true, 'b'};
    return {};
}

std::optional<PrimeCertificate> nonabelian_prime_search(const QuadPair& pair, unsigned long bound) {
    NormalForm nf = normal_form(pair);
    const Rational radicand = nf.beta - nf.c;
    Rational s;
    const bool rational_shift = radicand != 0 && exact_sqrt(radicand, s);
    for (unsigned long p : small_primes()) {
        if (p > bound) break;
        if (p == 2) continue;
        if (nf.c != 0 && valuation(nf.c, p) < 0) continue;
        if (auto r = poonen_check(nf.c, nf.beta, p); r.fired)
            return PrimeCertificate{p, r.condition, PrimeCertificate::Datum::Basepoint, nf.beta};
        if (radicand == 0) continue;
        if (rational_shift) {
            for (const Rational& root : {s, Rational(-s)}) {
                if (auto r = poonen_check(nf.c, root, p); r.fired)
                    return PrimeCertificate{p, r.condition, PrimeCertificate::Datum::RationalPreimage, root};
            }
        } else if (auto r = poonen_check_sqrt(nf.c, radicand, p); r.fired) {
            return PrimeCertificate{p, r.condition, PrimeCertificate::Datum::SqrtPreimage, radicand};
        }
    }
    return std::nullopt;
}

std::string to_string(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::Level2D8: return "Level2D8";
        case Certificate::Kind::PoonenPrime: return "PoonenPrime";
        case Certificate::Kind::FaithfulNode2Dim: return "FaithfulNode2Dim";
        case Certificate::Kind::QuadFieldD8: return "QuadFieldD8";
        case Certificate::Kind::PostCriticallyInfinite: return "PostCriticallyInfinite";
    }
    return "?";
}

std::string to_string(AbelianVerdict::Status s) {
    switch (s) {
        case AbelianVerdict::Status::Abelian: return "Abelian";
        case AbelianVerdict::Status::NonAbelian: return "NonAbelian";
        case AbelianVerdict::Status::NotApplicable: return "NotApplicable";
    }
    return "?";
}

bool on_abelian_list(const NormalForm& nf) {
    if (nf.c == 0) return nf.beta == 1 || nf.beta == -1;
    if (nf.c == -2) return nf.beta == 0 || nf.beta == 1 || nf.beta == -1 || nf.beta == 2 || nf.beta == -2;
    return false;
}

namespace {

std::vector<QuadElement> quad_orbit_pair(const Rational& c, const QuadElement& node) {
    QuadElement c1{Rational(-c), Rational(0), node.d};
    QuadElement c2{Rational(c * c + c), Rational(0), node.d};
    return {c1 + node, c2 - node};
}

std::optional<Certificate> level2_d8(const NormalForm& nf) {
    Rational c1 = nf.beta - nf.c;
    Rational c2 = nf.c * nf.c + nf.c - nf.beta;
    if (span_dimension_by_coprime_base({c1, c2}) != 2) return std::nullopt;
    Certificate cert;
    cert.kind = Certificate::Kind::Level2D8;
    cert.values = {c1, c2};
    return cert;
}

std::optional<Certificate> faithful_node_2dim(const NormalForm& nf, std::size_t budget) {
    AdjustedOrbit orbit = adjusted_orbit(QuadPair::normal(nf.c, nf.beta), std::max<std::size_t>(budget, 2));
    if (is_perfect_square(orbit.adjusted[0]).square) return std::nullopt;
    for (std::size_t n = 2; n <= orbit.adjusted.size(); ++n) {
        std::vector<Rational> prefix(orbit.adjusted.begin(), orbit.adjusted.begin() + static_cast<std::ptrdiff_t>(n));
        if (span_dimension_by_coprime_base(prefix) >= 2) {
            Certificate cert;
            cert.kind = Certificate::Kind::FaithfulNode2Dim;
            cert.values = std::move(prefix);
            return cert;
        }
    }
    return std::nullopt;
}

// Breadth-first walk down the rational part of the backward orbit of beta,
// stopping at the first irrational preimage over which f^2 - node has a
// dihedral Galois group.
std::optional<Certificate> quad_descent(const NormalForm& nf, unsigned depth, FactorBudget budget) {
    struct Node {
        Rational value;
        std::vector<Rational> chain;
    };
    std::deque<Node> frontier{{nf.beta, {nf.beta}}};
    std::set<Rational> visited{nf.beta};
    for (unsigned level = 0; level < depth && !frontier.empty(); ++level) {
        std::deque<Node> next;
        for (const Node& n : frontier) {
            Rational r = n.value - nf.c;
            Rational s;
            if (r == 0 || exact_sqrt(r, s)) {
                for (const Rational& child : {s, Rational(-s)}) {
                    if (!visited.insert(child).second) continue;
                    auto chain = n.chain;
                    chain.push_back(child);
                    next.push_back({child, std::move(chain)});
                }
                continue;
            }
            std::pair<std::int64_t, Rational> dec;
            try {
                dec = squarefree_decomposition(r, budget);
            } catch (const BudgetExceeded&) {
                continue;
            } catch (const std::overflow_error&) {
                continue;
            }
            QuadElement node{Rational(0), dec.second, dec.first};
            auto values = quad_orbit_pair(nf.c, node);
            if (quad_independent(values) == 2) {
                Certificate cert;
                cert.kind = Certificate::Kind::QuadFieldD8;
                cert.chain = n.chain;
                cert.node = node;
                cert.quad_values = std::move(values);
                return cert;
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

bool replay_prime(const Certificate& cert) {
    if (!cert.prime) return false;
    const auto& pc = *cert.prime;
    PoonenResult r;
    switch (pc.datum_kind) {
        case PrimeCertificate::Datum::Basepoint:
            if (pc.datum != cert.beta) return false;
            r = poonen_check(cert.c, pc.datum, pc.prime);
            break;
        case PrimeCertificate::Datum::RationalPreimage:
            if (pc.datum * pc.datum + cert.c != cert.beta) return false;
            r = poonen_check(cert.c, pc.datum, pc.prime);
            break;
        case PrimeCertificate::Datum::SqrtPreimage:
            if (pc.datum != cert.beta - cert.c) return false;
            r = poonen_check_sqrt(cert.c, pc.datum, pc.prime);
            break;
    }
    return r.fired && r.condition == pc.condition;
}

bool replay_unchecked(const Certificate& cert) {
    const NormalForm nf{cert.c, cert.beta};
    switch (cert.kind) {
        case Certificate::Kind::Level2D8: {
            auto fresh = level2_d8(nf);
            return fresh && fresh->values == cert.values;
        }
        case Certificate::Kind::PoonenPrime:
            return replay_prime(cert);
        case Certificate::Kind::FaithfulNode2Dim: {
            if (cert.values.size() < 2) return false;
            AdjustedOrbit orbit = adjusted_orbit(QuadPair::normal(cert.c, cert.beta), cert.values.size());
            if (orbit.adjusted != cert.values || orbit.degeneracy) return false;
            if (is_perfect_square(cert.values[0]).square) return false;
            return span_dimension_by_coprime_base(cert.values) >= 2;
        }
        case Certificate::Kind::QuadFieldD8: {
            if (cert.chain.empty() || cert.chain.front() != cert.beta) return false;
            for (std::size_t i = 1; i < cert.chain.size(); ++i) {
                if (cert.chain[i] * cert.chain[i] + cert.c != cert.chain[i - 1]) return false;
            }
            const QuadElement& node = cert.node;
            if (node.a != 0 || node.b == 0) return false;
            if (is_perfect_square(Rational(node.d)).square) return false;
            if (node.b * node.b * Rational(node.d) + cert.c != cert.chain.back()) return false;
            auto values = quad_orbit_pair(cert.c, node);
            return values == cert.quad_values && quad_independent(values) == 2;
        }
        case Certificate::Kind::PostCriticallyInfinite: {
            PcfVerdict v = is_pcf(cert.c);
            return !v.pcf && v.witness_index == cert.witness_index;
        }
    }
    return false;
}

}  // namespace

bool replay(const Certificate& cert) {
    // Tampered inputs can make the primitives reject their arguments.
    try {
        return replay_unchecked(cert);
    } catch (const std::exception&) {
        return false;
    }
}

AbelianVerdict classify_abelian(const QuadPair& p, const ClassifyOptions& options) {
    const NormalForm nf = normal_form(p);
    AbelianVerdict v;
    auto finish = [&](Certificate cert, std::string provenance) {
        cert.c = nf.c;
        cert.beta = nf.beta;
        v.status = AbelianVerdict::Status::NonAbelian;
        v.provenance = std::move(provenance);
        v.certificate = std::move(cert);
        return v;
    };

    if (on_abelian_list(nf)) {
        v.status = AbelianVerdict::Status::Abelian;
        v.tag = nf.c == 0 ? "(x^2, " + to_string(nf.beta) + ")" : "(x^2-2, " + to_string(nf.beta) + ")";
        v.provenance = "rational-abelian-list";
        return v;
    }
    if (is_exceptional(p).exceptional) {
        v.status = AbelianVerdict::Status::NotApplicable;
        v.tag = "exceptional basepoint: the dynamical Galois group is finite iff the basepoint is exceptional";
        v.provenance = "finite-iff-exceptional";
        return v;
    }

    const bool degenerate = in_post_critical_orbit(p);
    if (!degenerate) {
        if (auto cert = level2_d8(nf)) return finish(std::move(*cert), "level2-dihedral");
        if (auto prime = nonabelian_prime_search(p, options.prime_bound)) {
            Certificate cert;
            cert.kind = Certificate::Kind::PoonenPrime;
            cert.prime = prime;
            return finish(std::move(cert), "tame-infinite-ramification");
        }
        if (auto cert = faithful_node_2dim(nf, options.orbit_budget))
            return finish(std::move(*cert), "faithful-node-dimension");
    }
    if (auto cert = quad_descent(nf, options.descent_depth, options.budget))
        return finish(std::move(*cert), "quadratic-descent-dihedral");

    PcfVerdict pcf = is_pcf(nf.c);
    if (!pcf.pcf) {
        Certificate cert;
        cert.kind = Certificate::Kind::PostCriticallyInfinite;
        cert.witness_index = pcf.witness_index;
        return finish(std::move(cert), "abelian-implies-pcf");
    }
    if (degenerate) {
        v.status = AbelianVerdict::Status::NotApplicable;
        v.tag = "basepoint on the post-critical orbit and no descent certificate found";
        v.provenance = "degenerate-basepoint";
        return v;
    }
    // Only x^2 and x^2 - 2 remain: powering and Chebyshev maps, abelian exactly
    // at roots-of-unity basepoints, none of which is rational off the list.
    v.status = AbelianVerdict::Status::NonAbelian;
    v.tag = "powering/Chebyshev map with a basepoint off the root-of-unity list; no replayable certificate found";
    v.provenance = kRootOfUnityRule;
    return v;
}

}  // namespace arboreal
