#include "arboreal/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace arboreal {

void FactorBudget::spend(std::uint64_t n) {
    if (n > operations) {
        operations = 0;
        throw BudgetExceeded("factorization budget exhausted");
    }
    operations -= n;
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialDivisionLimit, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i < kTrialDivisionLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j < kTrialDivisionLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

namespace {

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
Integer rho_split(const Integer& n, FactorBudget& budget, std::mt19937_64& rng) {
    if (mpz_even_p(n.get_mpz_t())) return Integer(2);
    for (;;) {
        Integer c = Integer(static_cast<unsigned long>(rng() % 1'000'000 + 1));
        Integer y = Integer(static_cast<unsigned long>(rng() % 1'000'000 + 2));
        Integer g = 1, q = 1, x, ys;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        while (g == 1) {
            x = y;
            budget.spend(r);
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t steps = std::min(m, r - k);
                budget.spend(steps);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                budget.spend(1);
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const Integer& n, FactorBudget& budget, std::mt19937_64& rng, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer r = sqrt(n);
        std::map<Integer, unsigned> half;
        split_into(r, budget, rng, half);
        for (auto& [p, e] : half) out[p] += 2 * e;
        return;
    }
    Integer d = rho_split(n, budget, rng);
    split_into(d, budget, rng, out);
    split_into(Integer(n / d), budget, rng, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n, FactorBudget& budget) {
    if (n == 0) throw std::domain_error("factor(0)");
    Integer m = abs(n);
    std::map<Integer, unsigned> found;
    std::uint64_t divisions = 0;
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        if (Integer(p) * p > m) break;
        ++divisions;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            found[Integer(p)] = e;
        }
    }
    budget.spend(divisions);
    if (m != 1) {
        Integer limit(kTrialDivisionLimit);
        if (m < limit * limit) {
            ++found[m];
        } else {
            std::mt19937_64 rng(budget.seed);
            split_into(m, budget, rng, found);
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace arboreal
