#pragma once

#include "arboreal/index_vector.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace arboreal {

/// Finite stand-in for an infinite index set J. Members are pairwise distinct.
class IndexFamily {
public:
    IndexFamily() = default;
    explicit IndexFamily(std::vector<IndexVector> members);

    const std::vector<IndexVector>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    void push_back(IndexVector v);

private:
    std::vector<IndexVector> members_;
};

/// supp(v) = {s, s+k, ..., s+(l-1)k} for some s >= 1.
bool is_progression(const IndexVector& v, std::uint64_t k, std::uint64_t l);

struct ProgressingReport {
    bool holds = true;
    std::vector<std::size_t> offenders;  // member positions, or target positions in span mode
    /// Span mode: for each target, the members summing to it (empty optional if not in the span).
    std::vector<std::optional<std::vector<std::size_t>>> span_certificates;
};

ProgressingReport progressing_witness(const IndexFamily& family, std::uint64_t k, std::uint64_t l);
/// Checks only the requested span elements; a target outside the span is an offender.
ProgressingReport progressing_witness(const IndexFamily& family, const std::vector<IndexVector>& targets,
                                      std::uint64_t k, std::uint64_t l);

/// Largest i in supp(v), i > M, coprime to every other support index above M.
std::optional<std::uint64_t> m_coprime_member(const IndexVector& v, std::uint64_t m);

struct MCoprimeReport {
    bool holds = true;
    std::vector<std::optional<std::uint64_t>> witnesses;
    std::vector<std::uint64_t> running_max;  // max witness over each prefix of the family
    std::vector<std::size_t> failures;
    /// Finite evidence of unboundedness: the maximum witness over the second
    /// half of the family strictly exceeds the maximum over the first half.
    bool unbounded = false;
};

/// Accumulates a report one member at a time, so large families need not be stored.
class MCoprimeScan {
public:
    explicit MCoprimeScan(std::uint64_t m) : m_(m) {}
    std::optional<std::uint64_t> add(const IndexVector& v);
    void add_witness(std::optional<std::uint64_t> w);
    MCoprimeReport finish() &&;

private:
    std::uint64_t m_;
    MCoprimeReport report_;
};

MCoprimeReport m_coprime_witness(const IndexFamily& family, std::uint64_t m);

struct BertrandMember {
    std::uint64_t a = 0;
    std::uint64_t witness = 0;  // 1 when a = 1, else the largest prime p <= a (with 2p > a)
};

/// Witness for v(n) = {1, ..., a}; throws std::logic_error if 2p > a fails.
BertrandMember bertrand_member(std::uint64_t a);
/// Members v(n) with support {1..a_n}; `a` must be strictly increasing and start at >= 1.
std::pair<IndexFamily, std::vector<BertrandMember>> bertrand_family(const std::vector<std::uint64_t>& a);

}  // namespace arboreal
