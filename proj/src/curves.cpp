#include "arboreal/curves.hpp"

#include "arboreal/index_sets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arboreal {

void CurveSpec::validate() const {
    if (k == 0 || l == 0 || i0 == 0) throw std::invalid_argument("curve needs k, l, i0 >= 1");
}

bool is_smooth(const CurveSpec& curve) {
    curve.validate();
    const std::uint64_t top = curve.k * curve.l + curve.i0;
    if (adjusted_orbit(curve.pair, top).degeneracy) return false;
    // A common root x of f^m - alpha and f^n - alpha (m < n) forces f^{n-m}(alpha) = alpha.
    Rational z = curve.pair.alpha;
    for (std::uint64_t d = 1; d < curve.l; ++d) {
        z = curve.pair.iterate(z, curve.k);
        if (z == curve.pair.alpha) return false;
    }
    return true;
}

Rational rhs_eval(const CurveSpec& curve, const Rational& x) {
    curve.validate();
    Rational value = 1;
    Rational z = curve.pair.iterate(x, curve.k + curve.i0);
    for (std::uint64_t j = 1; j <= curve.l; ++j) {
        if (j > 1) z = curve.pair.iterate(z, curve.k);
        value *= z - curve.pair.alpha;
    }
    return value;
}

CurveSpec curve_for(const QuadPair& p, const IndexVector& v, std::uint64_t i0) {
    const auto& s = v.support();
    if (s.empty()) throw std::invalid_argument("curve_for needs a non-zero index vector");
    std::uint64_t k = s.size() > 1 ? s[1] - s[0] : 1;
    if (!is_progression(v, k, s.size())) throw std::invalid_argument("support of " + v.to_string() + " is not an arithmetic progression");
    return CurveSpec{p, k, s.size(), i0};
}

std::optional<CurvePoint> construct_point(const QuadPair& p, const IndexVector& v, std::uint64_t i0) {
    CurveSpec curve = curve_for(p, v, i0);
    const std::uint64_t s = v.support().front();
    if (s < 2) throw std::invalid_argument("construct_point needs min supp(v) >= 2");
    if (s < curve.k + i0) throw std::invalid_argument("construct_point needs s - k - i0 >= 0");
    AdjustedOrbit orbit = adjusted_orbit(p, v.max_index());
    Rational product = 1;
    for (auto i : v.support()) product *= orbit.adjusted[i - 1];
    Rational y;
    if (!exact_sqrt(product, y)) return std::nullopt;
    CurvePoint point{p.iterate(p.critical_point(), s - curve.k - i0), y};
    if (rhs_eval(curve, point.x) != product) throw std::logic_error("construct_point: orbit identity failed");
    return point;
}

namespace {

void points_for_numerator(const CurveSpec& curve, std::int64_t num, std::uint64_t h, std::vector<CurvePoint>& out) {
    for (std::uint64_t q = 1; q <= h; ++q) {
        if (std::gcd(static_cast<std::uint64_t>(num < 0 ? -num : num), q) != 1) continue;
        Rational x(static_cast<long>(num), static_cast<unsigned long>(q));
        Rational y;
        if (!exact_sqrt(rhs_eval(curve, x), y)) continue;
        out.push_back({x, y});
        if (y != 0) out.push_back({x, Rational(-y)});
    }
}

}  // namespace

std::vector<CurvePoint> naive_point_search_serial(const CurveSpec& curve, std::uint64_t h) {
    curve.validate();
    std::vector<CurvePoint> out;
    const std::int64_t bound = static_cast<std::int64_t>(h);
    for (std::int64_t num = -bound; num <= bound; ++num) points_for_numerator(curve, num, h, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CurvePoint> naive_point_search(const CurveSpec& curve, std::uint64_t h) {
    curve.validate();
    const std::int64_t bound = static_cast<std::int64_t>(h);
    std::vector<std::vector<CurvePoint>> stripes(2 * h + 1);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t num = -bound; num <= bound; ++num) points_for_numerator(curve, num, h, stripes[num + bound]);
    std::vector<CurvePoint> out;
    for (auto& s : stripes) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace arboreal
