#include "arboreal/index_sets.hpp"

#include "arboreal/rational.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace arboreal {

IndexFamily::IndexFamily(std::vector<IndexVector> members) {
    for (auto& v : members) push_back(std::move(v));
}

void IndexFamily::push_back(IndexVector v) {
    if (std::find(members_.begin(), members_.end(), v) != members_.end())
        throw std::invalid_argument("index family members must be distinct: " + v.to_string());
    members_.push_back(std::move(v));
}

bool is_progression(const IndexVector& v, std::uint64_t k, std::uint64_t l) {
    if (k == 0 || l == 0) throw std::invalid_argument("is_progression needs k, l >= 1");
    const auto& s = v.support();
    if (s.size() != l) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] - s[i - 1] != k) return false;
    }
    return true;
}

ProgressingReport progressing_witness(const IndexFamily& family, std::uint64_t k, std::uint64_t l) {
    ProgressingReport r;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!is_progression(family.members()[i], k, l)) r.offenders.push_back(i);
    }
    r.holds = r.offenders.empty();
    return r;
}

ProgressingReport progressing_witness(const IndexFamily& family, const std::vector<IndexVector>& targets,
                                      std::uint64_t k, std::uint64_t l) {
    std::vector<F2Vector> basis;
    basis.reserve(family.size());
    for (const auto& v : family.members()) basis.push_back(v.to_f2());
    ProgressingReport r;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        auto cert = in_span(targets[t].to_f2(), basis);
        if (!cert || !is_progression(targets[t], k, l)) r.offenders.push_back(t);
        r.span_certificates.push_back(std::move(cert));
    }
    r.holds = r.offenders.empty();
    return r;
}

std::optional<std::uint64_t> m_coprime_member(const IndexVector& v, std::uint64_t m) {
    const auto& s = v.support();
    auto first = std::upper_bound(s.begin(), s.end(), m);
    for (auto it = s.end(); it != first;) {
        --it;
        const std::uint64_t i = *it;
        bool ok = true;
        // Ascending scan hits small shared factors first.
        for (auto jt = first; jt != s.end() && ok; ++jt) {
            if (jt != it && std::gcd(i, *jt) != 1) ok = false;
        }
        if (ok) return i;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> MCoprimeScan::add(const IndexVector& v) {
    auto w = m_coprime_member(v, m_);
    add_witness(w);
    return w;
}

void MCoprimeScan::add_witness(std::optional<std::uint64_t> w) {
    if (!w) report_.failures.push_back(report_.witnesses.size());
    std::uint64_t prev = report_.running_max.empty() ? 0 : report_.running_max.back();
    report_.running_max.push_back(std::max(prev, w.value_or(0)));
    report_.witnesses.push_back(w);
}

MCoprimeReport MCoprimeScan::finish() && {
    report_.holds = report_.failures.empty();
    const std::size_t n = report_.witnesses.size();
    if (n >= 2) {
        std::uint64_t first = 0, second = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t w = report_.witnesses[i].value_or(0);
            (i < n / 2 ? first : second) = std::max(i < n / 2 ? first : second, w);
        }
        report_.unbounded = second > first;
    }
    return std::move(report_);
}

MCoprimeReport m_coprime_witness(const IndexFamily& family, std::uint64_t m) {
    const auto& members = family.members();
    std::vector<std::optional<std::uint64_t>> found(members.size());
    const std::int64_t n = static_cast<std::int64_t>(members.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) found[i] = m_coprime_member(members[i], m);
    MCoprimeScan scan(m);
    for (auto w : found) scan.add_witness(w);
    return std::move(scan).finish();
}

BertrandMember bertrand_member(std::uint64_t a) {
    if (a == 0) throw std::invalid_argument("bertrand_member needs a >= 1");
    if (a == 1) return {1, 1};
    std::uint64_t p = a;
    while (!is_prime(p)) --p;
    if (2 * p <= a) throw std::logic_error("Bertrand witness failed for a = " + std::to_string(a));
    return {a, p};
}

std::pair<IndexFamily, std::vector<BertrandMember>> bertrand_family(const std::vector<std::uint64_t>& a) {
    std::vector<IndexVector> members;
    std::vector<BertrandMember> witnesses;
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] == 0 || (n > 0 && a[n] <= a[n - 1]))
            throw std::invalid_argument("bertrand_family needs a strictly increasing positive sequence");
        std::vector<std::uint64_t> support(a[n]);
        std::iota(support.begin(), support.end(), 1);
        members.emplace_back(std::move(support));
        witnesses.push_back(bertrand_member(a[n]));
    }
    return {IndexFamily(std::move(members)), std::move(witnesses)};
}

}  // namespace arboreal
