#pragma once

#include "arboreal/dynamics.hpp"
#include "arboreal/factor.hpp"
#include "arboreal/index_vector.hpp"
#include "arboreal/square_classes.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arboreal {

enum class GroupId { C1, C2, V4, C4, D8 };

std::string to_string(GroupId g);
unsigned order(GroupId g);
bool is_abelian(GroupId g);

/// Containment of the arboreal image in M_v: the product of the adjusted
/// orbit values over supp(v) is a rational square. Throws DegenerateBasepoint.
bool contained_in_Mv(const QuadPair& p, const IndexVector& v);

/// dim <c_{1,alpha}, ..., c_{N,alpha}> in Q*/Q*^2.
std::size_t ab_dimension(const QuadPair& p, std::size_t n, FactorBudget budget = {});

struct Level2Group {
    GroupId group = GroupId::C1;
    /// c_{1,beta} is not a square: some element swaps the two halves of the tree.
    bool root_swapping = false;
    /// Values of (phi_1, phi_2) over the group, derived from the splitting
    /// field of f^2 - alpha (not from the orbit product criterion).
    std::vector<std::array<bool, 2>> ab_image;
    Rational c1;
    Rational c2;
};

/// Exact Galois group of f^2 - alpha over Q. Throws DegenerateBasepoint.
Level2Group level2_galois(const QuadPair& p, FactorBudget budget = {});

/// Containment predicted by the level-2 image; v must be supported in {1, 2}.
bool predicted_in_Mv(const Level2Group& g, const IndexVector& v);

using CycleType = std::vector<unsigned>;

struct FrobeniusSample {
    unsigned level = 2;
    std::vector<unsigned long> primes_used;
    std::vector<unsigned long> primes_skipped;
    std::map<CycleType, std::size_t> counts;
    /// Groups with a realization whose cycle types cover every observation.
    std::vector<GroupId> compatible;
    /// Groups with a realization whose cycle types equal the observations.
    std::vector<GroupId> saturated;
};

/// Factorization degrees of f^level - alpha modulo the good primes in `primes`.
FrobeniusSample frobenius_sample(const QuadPair& p, unsigned level, const std::vector<unsigned long>& primes);
FrobeniusSample frobenius_sample_serial(const QuadPair& p, unsigned level, const std::vector<unsigned long>& primes);

/// The first `count` odd primes.
std::vector<unsigned long> odd_primes(std::size_t count);

struct PoonenResult {
    bool fired = false;
    char condition = '-';  // 'a' or 'b' when fired
};

/// Tame infinite-ramification test at an odd prime for (x^2 + c, alpha).
/// Requires v_p(c) >= 0.
PoonenResult poonen_check(const Rational& c, const Rational& alpha, unsigned long p);
/// Same test for the basepoint sqrt(r) over Q_p(sqrt r), r a non-square.
PoonenResult poonen_check_sqrt(const Rational& c, const Rational& r, unsigned long p);

struct PrimeCertificate {
    enum class Datum { Basepoint, RationalPreimage, SqrtPreimage };
    unsigned long prime = 0;
    char condition = '-';
    Datum datum_kind = Datum::Basepoint;
    /// The basepoint, the rational preimage s (s^2 + c = beta), or the radicand r = beta - c.
    Rational datum;
};

std::optional<PrimeCertificate> nonabelian_prime_search(const QuadPair& p, unsigned long bound);

struct Certificate {
    enum class Kind { Level2D8, PoonenPrime, FaithfulNode2Dim, QuadFieldD8, PostCriticallyInfinite };

    Kind kind = Kind::Level2D8;
    Rational c;     // normal form
    Rational beta;
    std::vector<Rational> values;              // Level2D8, FaithfulNode2Dim
    std::optional<PrimeCertificate> prime;     // PoonenPrime
    std::vector<Rational> chain;               // QuadFieldD8: beta <- chain[1] <- ... (rational preimages)
    QuadElement node;                          // QuadFieldD8: irrational preimage of chain.back()
    std::vector<QuadElement> quad_values;      // QuadFieldD8: c_{1,node}, c_{2,node}
    std::size_t witness_index = 0;             // PostCriticallyInfinite
};

std::string to_string(Certificate::Kind k);

/// Re-derives every fact the certificate records from its stored inputs.
bool replay(const Certificate& cert);

struct AbelianVerdict {
    enum class Status { Abelian, NonAbelian, NotApplicable };
    Status status = Status::NotApplicable;
    std::string tag;         // Abelian: list entry; NotApplicable: reason
    std::string provenance;  // rule that produced the verdict
    std::optional<Certificate> certificate;
};

std::string to_string(AbelianVerdict::Status s);

struct ClassifyOptions {
    std::size_t orbit_budget = 8;
    unsigned long prime_bound = 1000;
    unsigned descent_depth = 4;
    FactorBudget budget;
};

/// Provenance of uncertified NonAbelian verdicts for x^2 and x^2 - 2.
inline constexpr const char* kRootOfUnityRule = "root-of-unity-basepoint-criterion";

AbelianVerdict classify_abelian(const QuadPair& p, const ClassifyOptions& options = {});

/// Membership in the list of rational pairs with abelian dynamical Galois group.
bool on_abelian_list(const NormalForm& nf);

}  // namespace arboreal
