#pragma once

#include "arboreal/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arboreal {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Factorization effort bound. `operations` counts trial divisions and rho
/// iterations; it is consumed across calls that share the object.
struct FactorBudget {
    std::uint64_t operations = 4'000'000;
    std::uint64_t seed = 0;

    void spend(std::uint64_t n);
};

constexpr unsigned long kTrialDivisionLimit = 1'000'000;

/// Primes below kTrialDivisionLimit, computed once.
const std::vector<unsigned long>& small_primes();

/// Prime factorization of |n| (n != 0), sorted by prime.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n, FactorBudget& budget);

}  // namespace arboreal
