#include "arboreal/index_vector.hpp"

#include "arboreal/rational.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <stdexcept>

namespace arboreal {

IndexVector::IndexVector(std::vector<std::uint64_t> indices) {
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size();) {
        if (indices[i] == 0) throw std::invalid_argument("index vectors are indexed from 1");
        std::size_t j = i;
        while (j < indices.size() && indices[j] == indices[i]) ++j;
        if ((j - i) % 2 == 1) support_.push_back(indices[i]);
        i = j;
    }
}

IndexVector IndexVector::parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw ParseError("unbalanced braces in index vector '" + s + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("bad index '" + item + "' in index vector");
        std::uint64_t v = std::stoull(item);
        if (v == 0) throw ParseError("index vectors are indexed from 1");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
        if (start == s.size()) throw ParseError("trailing comma in index vector");
    }
    return IndexVector(std::move(out));
}

bool IndexVector::contains(std::uint64_t i) const { return std::binary_search(support_.begin(), support_.end(), i); }

IndexVector& IndexVector::operator+=(const IndexVector& other) {
    std::vector<std::uint64_t> out;
    std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(), other.support_.end(),
                                  std::back_inserter(out));
    support_ = std::move(out);
    return *this;
}

F2Vector IndexVector::to_f2() const {
    std::vector<Label> labels;
    labels.reserve(support_.size());
    for (auto i : support_) labels.push_back(Label::index(i));
    return F2Vector(std::move(labels));
}

IndexVector IndexVector::from_f2(const F2Vector& v) {
    std::vector<std::uint64_t> out;
    for (const auto& l : v.support()) {
        if (l.kind != LabelKind::Index) throw std::invalid_argument("not an index vector");
        out.push_back(l.value.get_ui());
    }
    return IndexVector(std::move(out));
}

std::string IndexVector::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(support_[i]);
    }
    return s + "}";
}

}  // namespace arboreal
