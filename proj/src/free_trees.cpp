#include "catpoly/free_trees.hpp"

#include <algorithm>
#include <stdexcept>

#include "env_caps.hpp"

namespace catpoly {

RootedLevelIterator::RootedLevelIterator(int n) {
    if (n < 1) throw std::invalid_argument("level sequences need n >= 1");
    levels_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) levels_[static_cast<size_t>(i)] = i + 1;
}

bool RootedLevelIterator::advance() {
    if (done_) return false;
    // Successor rule: find the last entry that can move up a level (> 2),
    // locate its parent position, and tile the tail with copies of the
    // segment from the parent onward. Ends at the star (1, 2, 2, ..., 2).
    int n = static_cast<int>(levels_.size());
    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
        if (levels_[static_cast<size_t>(i)] > 2) {
            p = i;
            break;
        }
    }
    if (p == -1) {
        done_ = true;
        return false;
    }
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
        if (levels_[static_cast<size_t>(i)] == levels_[static_cast<size_t>(p)] - 1) {
            q = i;
            break;
        }
    }
    for (int i = p; i < n; ++i)
        levels_[static_cast<size_t>(i)] = levels_[static_cast<size_t>(i - (p - q))];
    return true;
}

bool is_free_tree_form(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    if (n == 1) return true;

    // Principal subtree blocks are the maximal runs after positions of
    // level 2. Canonical ordering puts the deepest subtree first, so the
    // first two blocks carry the two largest depths.
    int c1 = 1;  // levels[1] == 2 always
    int c2 = n;
    for (int i = c1 + 1; i < n; ++i) {
        if (levels[static_cast<size_t>(i)] == 2) {
            c2 = i;
            break;
        }
    }
    int depth1 = 0;
    for (int i = c1; i < c2; ++i) depth1 = std::max(depth1, levels[static_cast<size_t>(i)] - 1);
    int depth2 = 0;
    if (c2 < n) {
        for (int i = c2; i < n && (i == c2 || levels[static_cast<size_t>(i)] > 2); ++i)
            depth2 = std::max(depth2, levels[static_cast<size_t>(i)] - 1);
    }

    if (depth2 == depth1) return true;  // unique center at the root
    if (depth2 != depth1 - 1) return false;  // center sits inside the first subtree

    // Bicentral tree: the first block is one half hung below the root; the
    // root plus the remaining blocks form the other half. Accept the
    // orientation where the hung half does not exceed the kept half.
    std::vector<int> hung, kept;
    hung.reserve(static_cast<size_t>(c2 - c1));
    for (int i = c1; i < c2; ++i) hung.push_back(levels[static_cast<size_t>(i)] - 1);
    kept.reserve(static_cast<size_t>(n - c2) + 1);
    kept.push_back(1);
    for (int i = c2; i < n; ++i) kept.push_back(levels[static_cast<size_t>(i)]);
    return hung <= kept;
}

Tree tree_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n > 0 ? n - 1 : 0));
    std::vector<int> last_at_level(static_cast<size_t>(n) + 2, -1);
    for (int i = 0; i < n; ++i) {
        int l = levels[static_cast<size_t>(i)];
        if (l >= 2) edges.emplace_back(last_at_level[static_cast<size_t>(l - 1)], i);
        last_at_level[static_cast<size_t>(l)] = i;
    }
    return Tree(n, std::move(edges));
}

void enumerate_free_trees(int n, const std::function<void(const Tree&)>& visit) {
    int cap = detail::env_cap("CATPOLY_CAP_TREE_ENUM", 18);
    if (n < 1) throw std::invalid_argument("enumerate_free_trees: n must be >= 1");
    if (n > cap)
        throw std::invalid_argument(
            "enumerate_free_trees: n = " + std::to_string(n) + " exceeds cap " +
            std::to_string(cap) +
            " (rooted sequences grow ~2.96^n; raise CATPOLY_CAP_TREE_ENUM to override)");
    RootedLevelIterator it(n);
    do {
        if (is_free_tree_form(it.levels())) visit(tree_from_levels(it.levels()));
    } while (it.advance());
}

std::vector<Tree> enumerate_free_trees(int n) {
    std::vector<Tree> out;
    enumerate_free_trees(n, [&](const Tree& t) { out.push_back(t); });
    return out;
}

}  // namespace catpoly
