#include "arboreal/f2_vector.hpp"

#include <algorithm>
#include <iterator>

namespace arboreal {

namespace {

// Symmetric difference of two sorted index sets.
std::vector<std::size_t> xor_sorted(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::string Label::to_string() const {
    switch (kind) {
        case LabelKind::Sign: return "-1";
        case LabelKind::Prime: return value.get_str();
        case LabelKind::Base: return "b" + value.get_str();
        case LabelKind::Index: return "i" + value.get_str();
    }
    return "?";
}

bool operator<(const Label& x, const Label& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    return cmp(x.value, y.value) < 0;
}

bool operator==(const Label& x, const Label& y) { return x.kind == y.kind && x.value == y.value; }

F2Vector::F2Vector(std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size();) {
        std::size_t j = i;
        while (j < labels.size() && labels[j] == labels[i]) ++j;
        if ((j - i) % 2 == 1) support_.push_back(labels[i]);
        i = j;
    }
}

F2Vector::F2Vector(std::initializer_list<Label> labels) : F2Vector(std::vector<Label>(labels)) {}

F2Vector F2Vector::of_primes(std::initializer_list<unsigned long> primes) {
    std::vector<Label> labels;
    for (auto p : primes) labels.push_back(Label::prime(Integer(p)));
    return F2Vector(std::move(labels));
}

F2Vector F2Vector::of_indices(std::initializer_list<std::uint64_t> indices) {
    std::vector<Label> labels;
    for (auto i : indices) labels.push_back(Label::index(i));
    return F2Vector(std::move(labels));
}

bool F2Vector::contains(const Label& l) const { return std::binary_search(support_.begin(), support_.end(), l); }

F2Vector& F2Vector::operator+=(const F2Vector& other) {
    std::vector<Label> out;
    out.reserve(support_.size() + other.support_.size());
    std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(), other.support_.end(),
                                  std::back_inserter(out));
    support_ = std::move(out);
    return *this;
}

std::vector<std::string> F2Vector::to_strings() const {
    std::vector<std::string> out;
    out.reserve(support_.size());
    for (const auto& l : support_) out.push_back(l.to_string());
    return out;
}

F2Vector add(const F2Vector& u, const F2Vector& v) { return u + v; }

void F2Eliminator::reduce(F2Vector& v, std::vector<std::size_t>& combination) const {
    while (!v.empty()) {
        auto it = rows_.find(v.support().front());
        if (it == rows_.end()) return;
        v += it->second.vector;
        combination = xor_sorted(combination, it->second.combination);
    }
}

bool F2Eliminator::insert(const F2Vector& v) {
    std::size_t id = inserted_++;
    F2Vector w = v;
    std::vector<std::size_t> combination{id};
    reduce(w, combination);
    if (w.empty()) return false;
    Label pivot = w.support().front();
    rows_.emplace(std::move(pivot), Row{std::move(w), std::move(combination)});
    return true;
}

std::optional<SpanCertificate> F2Eliminator::express(const F2Vector& v) const {
    F2Vector w = v;
    std::vector<std::size_t> combination;
    reduce(w, combination);
    if (!w.empty()) return std::nullopt;
    return combination;
}

std::size_t rank(const std::vector<F2Vector>& vs) {
    F2Eliminator e;
    for (const auto& v : vs) e.insert(v);
    return e.rank();
}

std::optional<SpanCertificate> in_span(const F2Vector& v, const std::vector<F2Vector>& vs) {
    F2Eliminator e;
    for (const auto& w : vs) e.insert(w);
    return e.express(v);
}

F2Vector sum_of(const SpanCertificate& certificate, const std::vector<F2Vector>& vs) {
    F2Vector total;
    for (auto i : certificate) total += vs.at(i);
    return total;
}

}  // namespace arboreal
