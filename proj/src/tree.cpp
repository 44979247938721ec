#include "catpoly/tree.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "env_caps.hpp"
#include "union_find.hpp"

namespace catpoly {

using detail::UnionFind;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string rooted_code(const std::vector<std::vector<int>>& adj, int root) {
    // Child codes sorted ascending; '(' sorts before ')', so deeper chains
    // come first and the code is a genuine isomorphism invariant.
    std::vector<std::string> out;
    struct Frame {
        int v, parent;
        size_t next = 0;
        std::vector<std::string> children;
    };
    std::vector<Frame> stack;
    stack.push_back({root, -1, 0, {}});
    std::string result;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nb = adj[static_cast<size_t>(f.v)];
        if (f.next < nb.size()) {
            int u = nb[f.next++];
            if (u != f.parent) stack.push_back({u, f.v, 0, {}});
        } else {
            std::sort(f.children.begin(), f.children.end());
            std::string code = "(";
            for (const auto& c : f.children) code += c;
            code += ')';
            stack.pop_back();
            if (stack.empty())
                result = std::move(code);
            else
                stack.back().children.push_back(std::move(code));
        }
    }
    return result;
}

}  // namespace

void validate_simple_graph(const SimpleGraph& g) {
    if (g.vertex_count < 1) fail("graph must have at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
            fail("edge endpoint out of range");
        if (u == v) fail("self-loops are not allowed");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) fail("duplicate edge");
    }
}

Tree::Tree(int vertex_count, std::vector<std::pair<int, int>> edges)
    : graph_{vertex_count, std::move(edges)} {
    validate_simple_graph(graph_);
    int n = graph_.vertex_count;
    if (static_cast<int>(graph_.edges.size()) != n - 1)
        fail("not a tree: " + std::to_string(graph_.edges.size()) + " edges for " +
             std::to_string(n) + " vertices (expected " + std::to_string(n - 1) + ")");
    UnionFind uf(n);
    int components = n;
    for (auto [u, v] : graph_.edges)
        if (uf.unite(u, v)) --components;
    if (components != 1) fail("not a tree: graph is disconnected");
}

std::vector<std::vector<int>> Tree::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(vertex_count()));
    for (auto [u, v] : edges()) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    return adj;
}

std::vector<int> Tree::degrees() const {
    std::vector<int> deg(static_cast<size_t>(vertex_count()), 0);
    for (auto [u, v] : edges()) {
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    return deg;
}

ParsedTree parse_tree(std::string_view text) {
    std::vector<std::pair<int, int>> raw;
    std::vector<int> lines;  // source line of each edge, for error messages
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        ++line_no;
        size_t a = 0, b = line.size();
        while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
        line = line.substr(a, b - a);
        if (!line.empty() && line[0] != '#') {
            int vals[2];
            size_t cursor = 0;
            for (int k = 0; k < 2; ++k) {
                while (cursor < line.size() &&
                       std::isspace(static_cast<unsigned char>(line[cursor])))
                    ++cursor;
                size_t start = cursor;
                while (cursor < line.size() &&
                       !std::isspace(static_cast<unsigned char>(line[cursor])))
                    ++cursor;
                auto tok = line.substr(start, cursor - start);
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), vals[k]);
                if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() ||
                    vals[k] < 0)
                    fail("line " + std::to_string(line_no) +
                         ": expected two non-negative vertex labels");
            }
            while (cursor < line.size() && std::isspace(static_cast<unsigned char>(line[cursor])))
                ++cursor;
            if (cursor != line.size())
                fail("line " + std::to_string(line_no) + ": trailing junk after edge");
            if (vals[0] == vals[1])
                fail("line " + std::to_string(line_no) + ": self-loop at vertex " +
                     std::to_string(vals[0]));
            raw.emplace_back(vals[0], vals[1]);
            lines.push_back(line_no);
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (raw.empty()) fail("no edges found; a tree file needs at least one edge line");

    std::set<int> labels;
    for (auto [u, v] : raw) {
        labels.insert(u);
        labels.insert(v);
    }
    std::vector<std::string> warnings;
    std::map<int, int> remap;
    int next = 0;
    for (int l : labels) remap[l] = next++;
    if (*labels.rbegin() != next - 1) {
        warnings.push_back("compacted " + std::to_string(next) +
                           " non-contiguous vertex labels (max label was " +
                           std::to_string(*labels.rbegin()) + ")");
        for (auto& [u, v] : raw) {
            u = remap[u];
            v = remap[v];
        }
    }
    int n = next;

    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < raw.size(); ++i) {
        auto key = std::minmax(raw[i].first, raw[i].second);
        if (!seen.insert({key.first, key.second}).second)
            fail("line " + std::to_string(lines[i]) + ": duplicate edge " +
                 std::to_string(raw[i].first) + "-" + std::to_string(raw[i].second));
    }
    if (static_cast<int>(raw.size()) > n - 1)
        fail("not a tree: " + std::to_string(raw.size()) + " edges on " + std::to_string(n) +
             " vertices means the graph contains a cycle");
    return ParsedTree{Tree(n, std::move(raw)), std::move(warnings)};
}

std::string to_edge_list_text(const Tree& t) {
    std::string out;
    for (auto [u, v] : t.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::vector<int> tree_centers(const Tree& t) {
    int n = t.vertex_count();
    if (n == 1) return {0};
    auto adj = t.adjacency();
    std::vector<int> deg = t.degrees();
    std::vector<int> layer;
    std::vector<bool> removed(static_cast<size_t>(n), false);
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<size_t>(v)] = true;
            --remaining;
            for (int u : adj[static_cast<size_t>(v)])
                if (!removed[static_cast<size_t>(u)] && --deg[static_cast<size_t>(u)] == 1)
                    next.push_back(u);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string canonical_code(const Tree& t) {
    auto adj = t.adjacency();
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = rooted_code(adj, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

int leaf_count(const Tree& t) {
    auto deg = t.degrees();
    if (t.vertex_count() == 1) return 0;
    return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

GraphUPolynomial u_polynomial_bruteforce(const SimpleGraph& g, bool include_y) {
    validate_simple_graph(g);
    int cap = std::min(detail::env_cap("CATPOLY_CAP_BRUTE_EDGES", 24), 62);
    int m = static_cast<int>(g.edges.size());
    if (m > cap)
        fail("u_polynomial_bruteforce: " + std::to_string(m) + " edges exceeds cap " +
             std::to_string(cap) + " (cost is 2^|E|; raise CATPOLY_CAP_BRUTE_EDGES to override)");
    GraphUPolynomial out;
    int n = g.vertex_count;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        UnionFind uf(n);
        int components = n;
        int picked = 0;
        for (int e = 0; e < m; ++e) {
            if (mask >> e & 1) {
                ++picked;
                if (uf.unite(g.edges[static_cast<size_t>(e)].first,
                             g.edges[static_cast<size_t>(e)].second))
                    --components;
            }
        }
        int rank = n - components;
        int ypow = picked - rank;
        if (!include_y && ypow > 0) continue;  // (y-1)^j vanishes at y=1
        std::vector<int> size(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++size[static_cast<size_t>(uf.find(v))];
        std::vector<int> parts;
        for (int s : size)
            if (s > 0) parts.push_back(s);
        out.add(partition_from_unsorted(std::move(parts)), include_y ? ypow : 0, 1);
    }
    return out;
}

PartitionPolynomial u_polynomial_tree(const Tree& t) {
    int n = t.vertex_count();
    if (n == 1) {
        PartitionPolynomial out;
        out.add(Partition({1}), 1);
        return out;
    }
    auto adj = t.adjacency();

    // Root at a center, breaking a bicentral tie by rooted code, so the
    // traversal is label-independent.
    auto centers = tree_centers(t);
    int root = centers[0];
    if (centers.size() == 2 && rooted_code(adj, centers[1]) < rooted_code(adj, centers[0]))
        root = centers[1];

    // State per vertex: detached component sizes (sorted descending) plus
    // the size of the component still containing the subtree root, mapped
    // to a subset count.
    using State = std::map<std::pair<std::vector<int>, int>, long long>;

    std::vector<int> order;  // post-order
    std::vector<int> parent(static_cast<size_t>(n), -1);
    {
        std::vector<int> stack{root};
        std::vector<int> pre;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            pre.push_back(v);
            for (int u : adj[static_cast<size_t>(v)])
                if (u != parent[static_cast<size_t>(v)]) {
                    parent[static_cast<size_t>(u)] = v;
                    stack.push_back(u);
                }
        }
        order.assign(pre.rbegin(), pre.rend());
    }

    // Deterministic fold order: children sorted by their rooted code.
    std::vector<std::string> codes(static_cast<size_t>(n));
    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    for (int v : order) {
        if (v == root) continue;
        children[static_cast<size_t>(parent[static_cast<size_t>(v)])].push_back(v);
    }
    std::vector<State> state(static_cast<size_t>(n));
    for (int v : order) {
        std::vector<std::string> child_codes;
        auto& kids = children[static_cast<size_t>(v)];
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            return codes[static_cast<size_t>(a)] < codes[static_cast<size_t>(b)];
        });
        std::string code = "(";
        State acc;
        acc[{std::vector<int>{}, 1}] = 1;
        for (int c : kids) {
            code += codes[static_cast<size_t>(c)];
            State next;
            for (const auto& [ka, ca] : acc) {
                for (const auto& [kc, cc] : state[static_cast<size_t>(c)]) {
                    std::vector<int> detached(ka.first.size() + kc.first.size());
                    std::merge(ka.first.begin(), ka.first.end(), kc.first.begin(),
                               kc.first.end(), detached.begin(), std::greater<int>());
                    long long count = ca * cc;  // bounded by 2^(n-1), no overflow here
                    {  // keep the edge to c: root components merge
                        auto key = std::make_pair(detached, ka.second + kc.second);
                        next[key] += count;
                    }
                    {  // cut the edge to c: its root component detaches
                        auto pos = std::lower_bound(detached.begin(), detached.end(), kc.second,
                                                    std::greater<int>());
                        detached.insert(pos, kc.second);
                        next[{std::move(detached), ka.second}] += count;
                    }
                }
            }
            acc = std::move(next);
            state[static_cast<size_t>(c)].clear();
        }
        code += ')';
        codes[static_cast<size_t>(v)] = std::move(code);
        state[static_cast<size_t>(v)] = std::move(acc);
    }

    PartitionPolynomial out;
    for (const auto& [key, count] : state[static_cast<size_t>(root)]) {
        std::vector<int> parts = key.first;
        auto pos = std::lower_bound(parts.begin(), parts.end(), key.second, std::greater<int>());
        parts.insert(pos, key.second);
        out.add(Partition(std::move(parts)), count);
    }
    return out;
}

PartitionPolynomial chromatic_p_expansion(const Tree& t) {
    PartitionPolynomial counts = u_polynomial_tree(t);
    long long n = t.vertex_count();
    PartitionPolynomial out;
    for (const auto& [lambda, c] : counts.terms())
        out.add(lambda, (n - lambda.length()) % 2 == 0 ? c : -c);
    return out;
}

}  // namespace catpoly
