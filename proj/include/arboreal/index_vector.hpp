#pragma once

#include "arboreal/f2_vector.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace arboreal {

/// Finite-support vector of the direct sum of copies of F2 indexed by i >= 1.
class IndexVector {
public:
    IndexVector() = default;
    /// Duplicates cancel in pairs; zero indices are rejected.
    explicit IndexVector(std::vector<std::uint64_t> indices);
    IndexVector(std::initializer_list<std::uint64_t> indices)
        : IndexVector(std::vector<std::uint64_t>(indices)) {}

    /// Parses "{1,4,5}" (braces optional, "{}" is the zero vector).
    static IndexVector parse(std::string_view text);

    const std::vector<std::uint64_t>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    std::uint64_t max_index() const { return support_.empty() ? 0 : support_.back(); }
    bool contains(std::uint64_t i) const;

    IndexVector& operator+=(const IndexVector& other);
    friend IndexVector operator+(IndexVector u, const IndexVector& v) { return u += v; }
    friend bool operator==(const IndexVector& u, const IndexVector& v) { return u.support_ == v.support_; }
    friend bool operator<(const IndexVector& u, const IndexVector& v) { return u.support_ < v.support_; }

    F2Vector to_f2() const;
    static IndexVector from_f2(const F2Vector& v);
    std::string to_string() const;

private:
    std::vector<std::uint64_t> support_;
};

}  // namespace arboreal
