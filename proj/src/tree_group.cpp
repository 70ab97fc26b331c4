#include "arboreal/tree_group.hpp"

#include <omp.h>

#include <bit>
#include <deque>

namespace arboreal {

namespace {

std::uint64_t node_count(unsigned depth) { return (std::uint64_t{1} << depth) - 1; }

void require_same_depth(const TreeAut& g, const TreeAut& h) {
    if (g.depth() != h.depth()) throw DepthMismatch("tree automorphisms of different depths");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t parse_path(std::string_view bits) {
    std::uint64_t v = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("path must be a bit string");
        v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return v;
}

std::string path_string(std::uint64_t value, unsigned length) {
    std::string s(length, '0');
    for (unsigned i = 0; i < length; ++i) {
        if ((value >> (length - 1 - i)) & 1) s[i] = '1';
    }
    return s;
}

bool hypotheses_hold(const TreeAut& sigma, const TreeAut& tau) {
    if (!phi(1, tau)) return false;
    auto as = abelianization(sigma);
    auto at = abelianization(tau);
    bool zero = true;
    for (bool b : as) zero = zero && !b;
    return !zero && as != at;
}

}  // namespace

TreeAut::TreeAut(unsigned depth) : depth_(depth) {
    if (depth == 0 || depth > 30) throw std::invalid_argument("tree depth must be in 1..30");
    words_.assign((node_count(depth) + 63) / 64, 0);
}

TreeAut TreeAut::from_levels(const std::vector<std::string>& levels) {
    TreeAut g(static_cast<unsigned>(levels.size()));
    for (unsigned k = 1; k <= levels.size(); ++k) {
        const std::string& row = levels[k - 1];
        if (row.size() != (std::size_t{1} << (k - 1)))
            throw std::invalid_argument("level " + std::to_string(k) + " needs " +
                                        std::to_string(std::size_t{1} << (k - 1)) + " labels");
        for (std::uint64_t j = 0; j < row.size(); ++j) {
            if (row[j] != '0' && row[j] != '1') throw std::invalid_argument("labels must be 0/1");
            g.set_label(k, j, row[j] == '1');
        }
    }
    return g;
}

TreeAut TreeAut::from_index(unsigned depth, std::uint64_t index) {
    if (depth > 6) throw std::invalid_argument("from_index supports depth <= 6");
    TreeAut g(depth);
    if (depth < 6 && (index >> node_count(depth)) != 0) throw std::out_of_range("index outside the group");
    g.words_[0] = index;
    return g;
}

bool TreeAut::label(unsigned level, std::uint64_t node) const {
    std::uint64_t pos = position(level, node);
    return (words_[pos / 64] >> (pos % 64)) & 1;
}

void TreeAut::set_label(unsigned level, std::uint64_t node, bool value) {
    if (level == 0 || level > depth_ || node >= (std::uint64_t{1} << (level - 1)))
        throw std::out_of_range("node outside the tree");
    std::uint64_t pos = position(level, node);
    std::uint64_t bit = std::uint64_t{1} << (pos % 64);
    if (value)
        words_[pos / 64] |= bit;
    else
        words_[pos / 64] &= ~bit;
}

bool TreeAut::is_identity() const {
    for (auto w : words_) {
        if (w) return false;
    }
    return true;
}

std::uint64_t TreeAut::index() const {
    if (depth_ > 6) throw std::invalid_argument("index() supports depth <= 6");
    return words_[0];
}

std::uint64_t TreeAut::node_image(unsigned length, std::uint64_t prefix) const {
    std::uint64_t out = 0;
    for (unsigned i = 1; i <= length; ++i) {
        std::uint64_t bit = (prefix >> (length - i)) & 1;
        std::uint64_t above = prefix >> (length - i + 1);
        out = (out << 1) | (bit ^ static_cast<std::uint64_t>(label(i, above)));
    }
    return out;
}

std::vector<std::string> TreeAut::to_strings() const {
    std::vector<std::string> out;
    for (unsigned k = 1; k <= depth_; ++k) {
        std::string row(std::size_t{1} << (k - 1), '0');
        for (std::uint64_t j = 0; j < row.size(); ++j) {
            if (label(k, j)) row[j] = '1';
        }
        out.push_back(std::move(row));
    }
    return out;
}

TreeAut node_swap(unsigned depth, unsigned level, std::uint64_t node) {
    TreeAut g(depth);
    g.set_label(level, node, true);
    return g;
}

std::string act(const TreeAut& g, std::string_view leaf) {
    if (leaf.size() != g.depth()) throw DepthMismatch("leaf length differs from tree depth");
    std::uint64_t x = parse_path(leaf);
    return path_string(g.node_image(g.depth(), x), g.depth());
}

TreeAut compose(const TreeAut& g, const TreeAut& h) {
    require_same_depth(g, h);
    TreeAut out(g.depth());
    for (unsigned k = 1; k <= g.depth(); ++k) {
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << (k - 1)); ++j) {
            std::uint64_t moved = h.node_image(k - 1, j);
            out.set_label(k, j, h.label(k, j) != g.label(k, moved));
        }
    }
    return out;
}

TreeAut inverse(const TreeAut& g) {
    TreeAut out(g.depth());
    // Level by level: out's action on level-k nodes only needs its labels above k.
    for (unsigned k = 1; k <= g.depth(); ++k) {
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << (k - 1)); ++j) {
            out.set_label(k, j, g.label(k, out.node_image(k - 1, j)));
        }
    }
    return out;
}

TreeAut commutator(const TreeAut& g, const TreeAut& h) {
    return compose(compose(inverse(g), inverse(h)), compose(g, h));
}

bool phi(unsigned level, const TreeAut& g) {
    if (level == 0 || level > g.depth()) throw std::out_of_range("phi level outside 1..depth");
    bool s = false;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << (level - 1)); ++j) s ^= g.label(level, j);
    return s;
}

std::vector<bool> abelianization(const TreeAut& g) {
    std::vector<bool> out(g.depth());
    for (unsigned k = 1; k <= g.depth(); ++k) out[k - 1] = phi(k, g);
    return out;
}

bool tilde_phi(unsigned level, const TreeAut& g) {
    if (level < 2 || level > g.depth()) throw std::out_of_range("tilde_phi level outside 2..depth");
    for (bool b : abelianization(g)) {
        if (b) throw std::domain_error("tilde_phi needs an element of the commutator subgroup");
    }
    bool s = false;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << (level - 2)); ++j) s ^= g.label(level, j);
    return s;
}

bool in_Mv(const TreeAut& g, const IndexVector& v) {
    if (v.max_index() > g.depth()) throw std::out_of_range("index vector reaches below the tree depth");
    bool s = false;
    for (auto i : v.support()) s ^= phi(static_cast<unsigned>(i), g);
    return !s;
}

std::vector<TreeAut> enumerate_group(unsigned depth) {
    if (depth == 0 || depth > 4) throw std::invalid_argument("enumerate_group supports depth 1..4");
    std::uint64_t order = std::uint64_t{1} << node_count(depth);
    std::vector<TreeAut> out;
    out.reserve(order);
    for (std::uint64_t i = 0; i < order; ++i) out.push_back(TreeAut::from_index(depth, i));
    return out;
}

std::set<TreeAut> closure(const SubgroupGens& s, std::size_t cap) {
    for (const auto& g : s.generators) {
        if (g.depth() != s.depth) throw DepthMismatch("generator depth differs from subgroup depth");
    }
    std::set<TreeAut> seen{TreeAut(s.depth)};
    std::deque<TreeAut> queue{TreeAut(s.depth)};
    while (!queue.empty()) {
        TreeAut x = queue.front();
        queue.pop_front();
        for (const auto& g : s.generators) {
            TreeAut y = compose(g, x);
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw CapExceeded("subgroup closure exceeded cap");
                queue.push_back(std::move(y));
            }
        }
    }
    return seen;
}

unsigned level(const SubgroupGens& s) {
    unsigned best = s.depth + 1;
    for (const auto& g : s.generators) {
        for (unsigned k = 1; k <= g.depth() && k < best; ++k) {
            for (std::uint64_t j = 0; j < (std::uint64_t{1} << (k - 1)); ++j) {
                if (g.label(k, j)) {
                    best = k;
                    break;
                }
            }
        }
    }
    if (best > s.depth) throw std::domain_error("level of the trivial subgroup is undefined");
    return best - 1;
}

std::vector<std::string> faithful_nodes(const SubgroupGens& s) {
    unsigned n = level(s);
    // The group fixes every node at distance n, so phi_1 of the restriction at w
    // is a character whose value on a generator is its label at w.
    std::vector<std::string> out;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
        for (const auto& g : s.generators) {
            if (g.label(n + 1, j)) {
                out.push_back(path_string(j, n));
                break;
            }
        }
    }
    return out;
}

TreeAut restrict_to(const TreeAut& g, std::string_view node) {
    unsigned len = static_cast<unsigned>(node.size());
    if (len >= g.depth()) throw std::out_of_range("node must lie above the last level");
    std::uint64_t w = parse_path(node);
    if (g.node_image(len, w) != w) throw std::domain_error("element moves the node it is restricted to");
    TreeAut out(g.depth() - len);
    for (unsigned k = 1; k <= out.depth(); ++k) {
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << (k - 1)); ++j) {
            out.set_label(k, j, g.label(len + k, (w << (k - 1)) | j));
        }
    }
    return out;
}

NoncommutationReport verify_noncommutation_serial(unsigned depth) {
    if (depth > 3) throw std::invalid_argument("exhaustive verification is capped at depth 3");
    NoncommutationReport report;
    report.depth = depth;
    auto group = enumerate_group(depth);
    report.pairs_examined = group.size() * group.size();
    for (const auto& tau : group) {
        for (const auto& sigma : group) {
            if (!hypotheses_hold(sigma, tau)) continue;
            ++report.pairs_tested;
            if (compose(sigma, tau) == compose(tau, sigma)) report.counterexamples.emplace_back(sigma, tau);
        }
    }
    return report;
}

NoncommutationReport verify_noncommutation(unsigned depth, std::uint64_t samples, std::uint64_t seed) {
    NoncommutationReport report;
    report.depth = depth;
    if (depth <= 3) {
        auto group = enumerate_group(depth);
        const std::int64_t n = static_cast<std::int64_t>(group.size());
        std::vector<std::vector<std::pair<TreeAut, TreeAut>>> found(group.size());
        std::vector<std::uint64_t> tested(group.size(), 0);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t t = 0; t < n; ++t) {
            const TreeAut& tau = group[t];
            for (const auto& sigma : group) {
                if (!hypotheses_hold(sigma, tau)) continue;
                ++tested[t];
                if (compose(sigma, tau) == compose(tau, sigma)) found[t].emplace_back(sigma, tau);
            }
        }
        report.pairs_examined = group.size() * group.size();
        for (std::size_t t = 0; t < group.size(); ++t) {
            report.pairs_tested += tested[t];
            for (auto& pr : found[t]) report.counterexamples.push_back(std::move(pr));
        }
        return report;
    }
    if (depth > 6) throw std::invalid_argument("sampled verification supports depth <= 6");
    report.exhaustive = false;
    report.pairs_examined = samples;
    const std::uint64_t mask = node_count(depth) >= 64 ? ~std::uint64_t{0}
                                                       : (std::uint64_t{1} << node_count(depth)) - 1;
    const std::int64_t count = static_cast<std::int64_t>(samples);
    std::vector<std::uint8_t> hit(samples, 0), ok(samples, 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        std::uint64_t r1 = splitmix64(seed ^ splitmix64(2 * static_cast<std::uint64_t>(i)));
        std::uint64_t r2 = splitmix64(seed ^ splitmix64(2 * static_cast<std::uint64_t>(i) + 1));
        TreeAut tau = TreeAut::from_index(depth, (r1 & mask) | 1);  // root swap forced
        TreeAut sigma = TreeAut::from_index(depth, r2 & mask);
        if (!hypotheses_hold(sigma, tau)) continue;
        ok[i] = 1;
        if (compose(sigma, tau) == compose(tau, sigma)) hit[i] = 1;
    }
    for (std::uint64_t i = 0; i < samples; ++i) {
        report.pairs_tested += ok[i];
        if (!hit[i]) continue;
        std::uint64_t r1 = splitmix64(seed ^ splitmix64(2 * i));
        std::uint64_t r2 = splitmix64(seed ^ splitmix64(2 * i + 1));
        report.counterexamples.emplace_back(TreeAut::from_index(depth, r2 & mask),
                                            TreeAut::from_index(depth, (r1 & mask) | 1));
    }
    return report;
}

}  // namespace arboreal
