#pragma once

#include "arboreal/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arboreal {

/// Kinds are declared in elimination order: SIGN < Prime < Base < Index.
enum class LabelKind : std::uint8_t { Sign = 0, Prime = 1, Base = 2, Index = 3 };

/// Coordinate name of a sparse F2 vector. `value` is the prime, the coprime-base
/// element id or the positive index; it is zero for Sign.
struct Label {
    LabelKind kind = LabelKind::Sign;
    Integer value = 0;

    static Label sign() { return {LabelKind::Sign, 0}; }
    static Label prime(const Integer& p) { return {LabelKind::Prime, p}; }
    static Label base(std::uint64_t id) { return {LabelKind::Base, Integer(static_cast<unsigned long>(id))}; }
    static Label index(std::uint64_t i) { return {LabelKind::Index, Integer(static_cast<unsigned long>(i))}; }

    std::string to_string() const;
};

bool operator<(const Label& x, const Label& y);
bool operator==(const Label& x, const Label& y);
inline bool operator!=(const Label& x, const Label& y) { return !(x == y); }

class F2Vector {
public:
    F2Vector() = default;
    /// Duplicated labels cancel in pairs.
    explicit F2Vector(std::vector<Label> labels);
    F2Vector(std::initializer_list<Label> labels);

    static F2Vector of_primes(std::initializer_list<unsigned long> primes);
    static F2Vector of_indices(std::initializer_list<std::uint64_t> indices);

    const std::vector<Label>& support() const { return support_; }
    bool empty() const { return support_.empty(); }
    std::size_t weight() const { return support_.size(); }
    bool contains(const Label& l) const;

    F2Vector& operator+=(const F2Vector& other);
    friend F2Vector operator+(F2Vector u, const F2Vector& v) { return u += v; }
    friend bool operator==(const F2Vector& u, const F2Vector& v) { return u.support_ == v.support_; }
    friend bool operator!=(const F2Vector& u, const F2Vector& v) { return !(u == v); }

    /// Sorted label strings, e.g. ["-1", "2", "5"] or ["i1", "i3"].
    std::vector<std::string> to_strings() const;

private:
    std::vector<Label> support_;
};

F2Vector add(const F2Vector& u, const F2Vector& v);

/// Indices into the input list whose vectors sum to the target.
using SpanCertificate = std::vector<std::size_t>;

/// Reduced echelon basis over F2, pivoting on the smallest label of each row.
class F2Eliminator {
public:
    /// Inserts a vector; returns true if it enlarged the span.
    bool insert(const F2Vector& v);
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }
    /// Combination of inserted vectors (by insertion order) summing to v.
    std::optional<SpanCertificate> express(const F2Vector& v) const;

private:
    struct Row {
        F2Vector vector;
        std::vector<std::size_t> combination;
    };
    void reduce(F2Vector& v, std::vector<std::size_t>& combination) const;

    std::map<Label, Row> rows_;
    std::size_t inserted_ = 0;
};

std::size_t rank(const std::vector<F2Vector>& vs);

std::optional<SpanCertificate> in_span(const F2Vector& v, const std::vector<F2Vector>& vs);

/// Sums the certificate's members of vs.
F2Vector sum_of(const SpanCertificate& certificate, const std::vector<F2Vector>& vs);

}  // namespace arboreal
