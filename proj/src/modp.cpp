#include "arboreal/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace arboreal::modp {

namespace {

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    // Fermat; p is prime.
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

Poly monic(Poly f, std::uint64_t p) {
    if (f.empty()) return f;
    std::uint64_t lead_inv = inv(f.back(), p);
    for (auto& c : f) c = c * lead_inv % p;
    return f;
}

}  // namespace

std::optional<std::uint64_t> reduce(const Rational& q, std::uint64_t p) {
    Integer den = q.get_den() % Integer(static_cast<unsigned long>(p));
    if (den == 0) return std::nullopt;
    Integer num = q.get_num() % Integer(static_cast<unsigned long>(p));
    if (num < 0) num += static_cast<unsigned long>(p);
    return num.get_ui() * inv(den.get_ui(), p) % p;
}

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly out(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + p - g[i]) % p;
    return trim(std::move(out));
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    Poly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + f[i] * g[j]) % p;
    }
    return trim(std::move(out));
}

namespace {

void divmod(const Poly& f, const Poly& g, std::uint64_t p, Poly& q, Poly& r) {
    if (g.empty()) throw std::domain_error("polynomial division by zero");
    r = f;
    q.assign(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
    std::uint64_t lead_inv = inv(g.back(), p);
    while (r.size() >= g.size() && !r.empty()) {
        std::size_t shift = r.size() - g.size();
        std::uint64_t factor = r.back() * lead_inv % p;
        q[shift] = factor;
        for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] = (r[shift + i] + p - factor * g[i] % p) % p;
        r = trim(std::move(r));
    }
    q = trim(std::move(q));
}

}  // namespace

Poly rem(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly q, r;
    divmod(f, g, p, q, r);
    return r;
}

Poly quot(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly q, r;
    divmod(f, g, p, q, r);
    return q;
}

Poly gcd(Poly f, Poly g, std::uint64_t p) {
    f = trim(std::move(f));
    g = trim(std::move(g));
    while (!g.empty()) {
        Poly r = rem(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return monic(std::move(f), p);
}

Poly derivative(const Poly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    Poly out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * (i % p) % p;
    return trim(std::move(out));
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, std::uint64_t p) {
    Poly result{1};
    Poly b = rem(base, modulus, p);
    while (e) {
        if (e & 1) result = rem(mul(result, b, p), modulus, p);
        b = rem(mul(b, b, p), modulus, p);
        e >>= 1;
    }
    return result;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
    Poly d = derivative(f, p);
    if (d.empty()) return f.size() <= 1;
    return gcd(f, d, p).size() == 1;
}

std::vector<unsigned> factor_degrees(const Poly& f_in, std::uint64_t p) {
    Poly f = monic(trim(f_in), p);
    std::vector<unsigned> degrees;
    const Poly x{0, 1};
    Poly h = x;
    for (unsigned i = 1; f.size() >= 2 * i + 1; ++i) {
        h = powmod(h, p, f, p);
        Poly g = gcd(sub(h, x, p), f, p);
        unsigned dg = static_cast<unsigned>(g.size() - 1);
        if (dg > 0) {
            for (unsigned k = 0; k < dg / i; ++k) degrees.push_back(i);
            f = quot(f, g, p);
            h = rem(h, f, p);
        }
    }
    if (f.size() > 1) degrees.push_back(static_cast<unsigned>(f.size() - 1));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace arboreal::modp
