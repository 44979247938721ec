#include "catpoly/caterpillar.hpp"

#include <algorithm>
#include <stdexcept>

#include "union_find.hpp"

namespace catpoly {

using detail::UnionFind;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

std::optional<CaterpillarView> caterpillar_view(const Tree& t) {
    int n = t.vertex_count();
    auto deg = t.degrees();

    std::vector<int> internal;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] >= 2) internal.push_back(v);
    if (internal.size() < 2) return std::nullopt;

    // Internal vertices must induce a path: within a tree that means
    // |I| - 1 induced edges (connectedness) and induced degree <= 2.
    std::vector<char> is_internal(static_cast<size_t>(n), 0);
    for (int v : internal) is_internal[static_cast<size_t>(v)] = 1;
    std::vector<int> induced_deg(static_cast<size_t>(n), 0);
    int induced_edges = 0;
    for (auto [u, v] : t.edges()) {
        if (is_internal[static_cast<size_t>(u)] && is_internal[static_cast<size_t>(v)]) {
            ++induced_edges;
            ++induced_deg[static_cast<size_t>(u)];
            ++induced_deg[static_cast<size_t>(v)];
        }
    }
    if (induced_edges != static_cast<int>(internal.size()) - 1) return std::nullopt;
    for (int v : internal)
        if (induced_deg[static_cast<size_t>(v)] > 2) return std::nullopt;

    // Walk the induced path from its smaller-labeled endpoint.
    auto adj = t.adjacency();
    std::vector<int> spine;
    int start = -1;
    for (int v : internal)
        if (induced_deg[static_cast<size_t>(v)] == 1 && (start == -1 || v < start)) start = v;
    int prev = -1, cur = start;
    while (cur != -1) {
        spine.push_back(cur);
        int next = -1;
        for (int u : adj[static_cast<size_t>(cur)])
            if (u != prev && is_internal[static_cast<size_t>(u)]) next = u;
        prev = cur;
        cur = next;
    }

    std::vector<int> leaves(spine.size());
    for (size_t i = 0; i < spine.size(); ++i)
        leaves[i] = deg[static_cast<size_t>(spine[i])] -
                    induced_deg[static_cast<size_t>(spine[i])];

    std::vector<int> rev_leaves(leaves.rbegin(), leaves.rend());
    if (rev_leaves < leaves) {
        std::reverse(spine.begin(), spine.end());
        leaves = std::move(rev_leaves);
    }

    bool proper = std::all_of(leaves.begin(), leaves.end(), [](int c) { return c >= 1; });
    return CaterpillarView{std::move(spine), std::move(leaves), proper};
}

PartitionPolynomial u_restricted(const Tree& t) {
    auto view = caterpillar_view(t);
    if (!view) fail("u_restricted: tree is not a caterpillar");

    int n = t.vertex_count();
    std::vector<char> is_spine(static_cast<size_t>(n), 0);
    for (int v : view->spine) is_spine[static_cast<size_t>(v)] = 1;
    std::vector<std::pair<int, int>> spine_edges, leaf_edges;
    for (auto e : t.edges()) {
        if (is_spine[static_cast<size_t>(e.first)] && is_spine[static_cast<size_t>(e.second)])
            spine_edges.push_back(e);
        else
            leaf_edges.push_back(e);
    }

    PartitionPolynomial out;
    int k = static_cast<int>(spine_edges.size());
    for (unsigned long long mask = 0; mask < (1ULL << k); ++mask) {
        UnionFind uf(n);
        for (auto [u, v] : leaf_edges) uf.unite(u, v);
        for (int e = 0; e < k; ++e)
            if (mask >> e & 1)
                uf.unite(spine_edges[static_cast<size_t>(e)].first,
                         spine_edges[static_cast<size_t>(e)].second);
        std::vector<int> size(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++size[static_cast<size_t>(uf.find(v))];
        std::vector<int> parts;
        for (int s : size)
            if (s > 0) parts.push_back(s);
        out.add(partition_from_unsorted(std::move(parts)), 1);
    }
    return out;
}

Composition phi(const Tree& t) {
    auto view = caterpillar_view(t);
    if (!view) fail("phi: tree is not a caterpillar");
    if (!view->proper)
        fail("phi: caterpillar is not proper (a spine vertex carries no leaf)");
    std::vector<int> parts;
    parts.reserve(view->leaf_counts.size());
    for (int c : view->leaf_counts) parts.push_back(1 + c);
    return reverse_class_rep(Composition(std::move(parts)));
}

Tree psi(const Composition& c) {
    if (c.length() < 2) fail("psi: composition needs at least two parts");
    for (int i = 0; i < c.length(); ++i)
        if (c[i] < 2) fail("psi: all parts must be >= 2 (part " + std::to_string(i + 1) +
                           " is " + std::to_string(c[i]) + ")");
    int k = c.length();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    int next = k;
    for (int i = 0; i < k; ++i)
        for (int l = 1; l < c[i]; ++l) edges.emplace_back(i, next++);
    return Tree(next, std::move(edges));
}

std::vector<Tree> enumerate_proper_caterpillars(int n) {
    std::vector<Tree> out;
    if (n < 4) return out;
    enumerate_compositions(n, 2, [&](const Composition& c) {
        if (c.length() < 2) return;
        if (reverse_class_rep(c) != c) return;  // one representative per class
        out.push_back(psi(c));
    });
    return out;
}

}  // namespace catpoly
