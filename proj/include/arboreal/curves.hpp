#pragma once

#include "arboreal/dynamics.hpp"
#include "arboreal/index_vector.hpp"

#include <optional>
#include <vector>

namespace arboreal {

/// y^2 = prod_{j=1}^{l} (f^{kj+i0}(x) - alpha).
struct CurveSpec {
    QuadPair pair;
    std::uint64_t k = 1;
    std::uint64_t l = 1;
    std::uint64_t i0 = 1;

    void validate() const;
    /// i0 >= 3 is the range where the curve has genus at least 2.
    bool genus_relevant() const { return i0 >= 3; }
};

/// No repeated roots in the right-hand side: each factor is squarefree (no
/// c_{n,alpha} vanishes up to the top iterate) and no two factors share a root
/// (f^{kd}(alpha) != alpha for 1 <= d < l).
bool is_smooth(const CurveSpec& curve);

Rational rhs_eval(const CurveSpec& curve, const Rational& x);

struct CurvePoint {
    Rational x;
    Rational y;
    friend bool operator==(const CurvePoint& p, const CurvePoint& q) { return p.x == q.x && p.y == q.y; }
    friend bool operator<(const CurvePoint& p, const CurvePoint& q) {
        return p.x != q.x ? p.x < q.x : p.y < q.y;
    }
};

/// Curve attached to a progression v with support {s, s+k, ..., s+(l-1)k}.
CurveSpec curve_for(const QuadPair& p, const IndexVector& v, std::uint64_t i0);

/// (f^{s-k-i0}(a), sqrt(prod_{i in supp v} c_{i,alpha})) when the product is a
/// square. Throws std::invalid_argument when v is not a progression, min supp < 2,
/// or s - k - i0 < 0.
std::optional<CurvePoint> construct_point(const QuadPair& p, const IndexVector& v, std::uint64_t i0);

/// Every rational point (x, y) with x = p/q in lowest terms, |p| <= h, 1 <= q <= h.
/// Sorted by (x, y); y = 0 points appear once.
std::vector<CurvePoint> naive_point_search(const CurveSpec& curve, std::uint64_t h);
std::vector<CurvePoint> naive_point_search_serial(const CurveSpec& curve, std::uint64_t h);

}  // namespace arboreal
