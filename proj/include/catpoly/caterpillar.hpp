#pragma once

// Caterpillars: trees whose internal (degree >= 2) vertices induce a path
// with at least two vertices. The spine weights 1 + leaves(v_i) read off a
// composition; conversely a composition with all parts >= 2 and length >= 2
// builds a proper caterpillar. Stars and paths on at most 3 vertices have
// no two-vertex internal path and do not count.

#include <optional>
#include <vector>

#include "catpoly/composition.hpp"
#include "catpoly/polynomial.hpp"
#include "catpoly/tree.hpp"

namespace catpoly {

struct CaterpillarView {
    // Spine in the chosen orientation: of the two directions, the one whose
    // leaf-count sequence is lexicographically smaller (ties: smaller first
    // vertex label).
    std::vector<int> spine;
    std::vector<int> leaf_counts;  // leaves hanging off each spine vertex
    bool proper = false;           // every spine vertex carries a leaf
};

std::optional<CaterpillarView> caterpillar_view(const Tree& t);

// Sum of x_{type(A)} over the edge subsets A containing every leaf edge,
// computed on the graph itself (2^{spine edges} subsets, union-find each).
PartitionPolynomial u_restricted(const Tree& t);

// Spine-weight composition (1 + leaf count per spine vertex) of a proper
// caterpillar, as its reverse-class representative. Errors on anything that
// is not a proper caterpillar.
Composition phi(const Tree& t);

// Proper caterpillar with length(c) spine vertices and c_i - 1 leaves on the
// i-th; requires all parts >= 2 and length >= 2. Spine vertices come first
// (0..k-1 along the path), then leaves in spine order.
Tree psi(const Composition& c);

// One proper caterpillar per isomorphism class on n vertices: psi applied
// to each reverse-class representative among compositions of n with parts
// >= 2 and length >= 2. Empty for n < 4; the smallest instance is psi((2,2)).
std::vector<Tree> enumerate_proper_caterpillars(int n);

}  // namespace catpoly
