#pragma once

#include "arboreal/index_vector.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arboreal {

class DepthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Automorphism of the binary rooted tree truncated at `depth` levels, stored
/// as its portrait: one swap bit per internal node. The level-k node reached
/// by the path bits p_1..p_{k-1} has index p_1 p_2 ... p_{k-1} read as a
/// binary number, first choice most significant.
class TreeAut {
public:
    explicit TreeAut(unsigned depth = 1);

    /// From per-level bit strings, e.g. {"1", "10"}.
    static TreeAut from_levels(const std::vector<std::string>& levels);
    /// Bits of `index` are the portrait in level order (depth <= 6).
    static TreeAut from_index(unsigned depth, std::uint64_t index);
    static std::uint64_t group_order_log2(unsigned depth) { return (std::uint64_t{1} << depth) - 1; }

    unsigned depth() const { return depth_; }
    bool label(unsigned level, std::uint64_t node) const;
    void set_label(unsigned level, std::uint64_t node, bool value);
    bool is_identity() const;
    std::uint64_t index() const;

    /// Image of the node at `length` below the root with path bits `prefix`.
    std::uint64_t node_image(unsigned length, std::uint64_t prefix) const;

    std::vector<std::string> to_strings() const;

    friend bool operator==(const TreeAut& x, const TreeAut& y) {
        return x.depth_ == y.depth_ && x.words_ == y.words_;
    }
    friend bool operator!=(const TreeAut& x, const TreeAut& y) { return !(x == y); }
    friend bool operator<(const TreeAut& x, const TreeAut& y) {
        if (x.depth_ != y.depth_) return x.depth_ < y.depth_;
        return x.words_ < y.words_;
    }

private:
    static std::uint64_t position(unsigned level, std::uint64_t node) {
        return (std::uint64_t{1} << (level - 1)) - 1 + node;
    }

    unsigned depth_;
    std::vector<std::uint64_t> words_;
};

/// Swap at a single node (level, node index).
TreeAut node_swap(unsigned depth, unsigned level, std::uint64_t node);

/// Leaves are bit strings of length depth, first character = level-1 choice.
std::string act(const TreeAut& g, std::string_view leaf);

/// act(compose(g, h), x) == act(g, act(h, x)).
TreeAut compose(const TreeAut& g, const TreeAut& h);
TreeAut inverse(const TreeAut& g);
TreeAut commutator(const TreeAut& g, const TreeAut& h);

bool phi(unsigned level, const TreeAut& g);
std::vector<bool> abelianization(const TreeAut& g);
/// Sum of the first half of the level-k labels; defined on the kernel of the abelianization.
bool tilde_phi(unsigned level, const TreeAut& g);
bool in_Mv(const TreeAut& g, const IndexVector& v);

/// Every element of the truncated group, ordered by index (depth <= 4).
std::vector<TreeAut> enumerate_group(unsigned depth);

struct SubgroupGens {
    unsigned depth = 1;
    std::vector<TreeAut> generators;
};

std::set<TreeAut> closure(const SubgroupGens& s, std::size_t cap = 1u << 16);

unsigned level(const SubgroupGens& s);
/// Nodes at distance level(s) from the root, as path bit strings.
std::vector<std::string> faithful_nodes(const SubgroupGens& s);

/// Portrait of g below node w; g must fix w.
TreeAut restrict_to(const TreeAut& g, std::string_view node);

struct NoncommutationReport {
    unsigned depth = 0;
    bool exhaustive = true;
    std::uint64_t pairs_examined = 0;
    std::uint64_t pairs_tested = 0;  // pairs meeting the hypotheses
    std::vector<std::pair<TreeAut, TreeAut>> counterexamples;
};

/// Pairs (sigma, tau) with phi_1(tau) = 1 and abelianization(sigma) outside
/// {0, abelianization(tau)} that nevertheless commute. Exhaustive for
/// depth <= 3, otherwise `samples` seeded random pairs.
NoncommutationReport verify_noncommutation(unsigned depth, std::uint64_t samples = 200'000, std::uint64_t seed = 0);
/// Single-threaded reference for the exhaustive path.
NoncommutationReport verify_noncommutation_serial(unsigned depth);

}  // namespace arboreal
