#pragma once

// Unlabeled trees: edge-list parsing, canonical codes for isomorphism
// testing, and the partition-indexed polynomial that sums x_{type(A)} over
// edge subsets A, via both the exponential definition and a subtree
// convolution that handles trees of a few dozen vertices instantly.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catpoly/polynomial.hpp"

namespace catpoly {

struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

// Throws unless vertex indices are in range and edges are loop- and
// duplicate-free.
void validate_simple_graph(const SimpleGraph& g);

class Tree {
public:
    // Validates tree-ness: exactly n-1 distinct non-loop edges, connected.
    Tree(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return graph_.vertex_count; }
    const std::vector<std::pair<int, int>>& edges() const { return graph_.edges; }
    const SimpleGraph& graph() const { return graph_; }

    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;

private:
    SimpleGraph graph_;
};

struct ParsedTree {
    Tree tree;
    std::vector<std::string> warnings;
};

// Edge-list format: one "u v" pair per line, 0-based labels; blank lines and
// lines starting with '#' are ignored. Non-contiguous labels are compacted
// in increasing order with a warning. Errors carry the offending line number.
ParsedTree parse_tree(std::string_view text);
std::string to_edge_list_text(const Tree& t);

// Balanced-parenthesis code, identical for trees iff they are isomorphic:
// the rooted code sorts child codes ascending, and the tree code is the
// lexicographically smaller rooted code over the (at most two) centers.
std::string canonical_code(const Tree& t);

// Centers of the tree (one or two vertices, by leaf peeling).
std::vector<int> tree_centers(const Tree& t);

int leaf_count(const Tree& t);

// Sum over all 2^{|E|} edge subsets A of x_{type(A)} (y-1)^{|A|-rank(A)}.
// include_y=false evaluates at y=1, keeping only subsets of full rank; for
// forests the two agree. Refuses graphs above the edge cap (default 24,
// CATPOLY_CAP_BRUTE_EDGES) since the cost is 2^{|E|}.
GraphUPolynomial u_polynomial_bruteforce(const SimpleGraph& g, bool include_y);

// Same sum for a tree (every y-exponent is 0), computed by a rooted DP:
// each vertex carries a polynomial over (multiset of detached component
// sizes, size of the component still holding the root); a child edge is
// either cut, detaching the child's root component, or kept, merging it.
// Children are folded in ascending rooted-code order.
PartitionPolynomial u_polynomial_tree(const Tree& t);

// Power-sum expansion of the chromatic symmetric function: the coefficient
// of p_lambda is (-1)^{n - length(lambda)} times the x_lambda count above.
PartitionPolynomial chromatic_p_expansion(const Tree& t);

}  // namespace catpoly
