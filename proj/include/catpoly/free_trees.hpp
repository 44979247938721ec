#pragma once

// Enumeration of unlabeled free trees, one per isomorphism class, driven by
// the classic level-sequence successor over canonical rooted trees with an
// O(n) acceptance test that keeps exactly the center-rooted canonical forms.

#include <functional>
#include <vector>

#include "catpoly/tree.hpp"

namespace catpoly {

// Canonical rooted level sequences on n vertices (root at level 1, children
// sorted by weakly decreasing subtree sequence), visited in decreasing
// lexicographic order starting from the path (1, 2, ..., n).
class RootedLevelIterator {
public:
    explicit RootedLevelIterator(int n);
    const std::vector<int>& levels() const { return levels_; }
    bool advance();  // false once exhausted

private:
    std::vector<int> levels_;
    bool done_ = false;
};

// True iff the canonical rooted sequence is the chosen encoding of its free
// tree: rooted at the unique center (the two deepest principal subtrees tie)
// or, for bicentral trees, at the center-edge endpoint whose remaining tree
// weakly dominates the subtree hanging below it.
bool is_free_tree_form(const std::vector<int>& levels);

Tree tree_from_levels(const std::vector<int>& levels);

// All free trees on n vertices, 1 <= n <= cap (default 18, env var
// CATPOLY_CAP_TREE_ENUM).
void enumerate_free_trees(int n, const std::function<void(const Tree&)>& visit);
std::vector<Tree> enumerate_free_trees(int n);

}  // namespace catpoly
