#pragma once

// Finite undirected multigraphs with loops and parallel edges.
// Edges carry identity by index in the edge list; parallel edges and the
// edge bijection between the two sides of a plan depend on that identity,
// so edges are never identified by their endpoints alone.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace geoplan {

struct Multigraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // (u, v); u == v is a loop

    Multigraph() = default;
    Multigraph(int n, std::vector<std::pair<int, int>> e)
        : vertex_count(n), edges(std::move(e)) {
        for (auto [u, v] : edges)
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("multigraph: endpoint out of range");
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("multigraph: endpoint out of range");
        edges.emplace_back(u, v);
    }

    bool is_loop(int e) const { return edges[e].first == edges[e].second; }
};

/// Degree of a vertex; loops count with multiplicity 2.
inline int degree(const Multigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count)
        throw std::invalid_argument("degree: vertex out of range");
    int d = 0;
    for (auto [u, w] : g.edges) {
        if (u == v) ++d;
        if (w == v) ++d;
    }
    return d;
}

// A degree sequence: positive entries, stored non-increasing, even sum.
struct DegreeSequence {
    std::vector<int> entries;

    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> e) : entries(std::move(e)) {
        if (entries.empty())
            throw std::invalid_argument("degree sequence: empty");
        for (int x : entries)
            if (x < 1) throw std::invalid_argument("degree sequence: entries must be positive");
        std::sort(entries.begin(), entries.end(), std::greater<int>());
        if (sum() % 2 != 0)
            throw std::invalid_argument("degree sequence: odd sum");
    }

    int size() const { return static_cast<int>(entries.size()); }
    int sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }
    int max_entry() const { return entries.front(); }

    bool operator==(const DegreeSequence& o) const { return entries == o.entries; }
    auto operator<=>(const DegreeSequence& o) const { return entries <=> o.entries; }
};

inline DegreeSequence degree_sequence(const Multigraph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("degree_sequence: graph has no edges");
    std::vector<int> d(g.vertex_count, 0);
    for (auto [u, v] : g.edges) {
        ++d[u];
        ++d[v];
    }
    return DegreeSequence(std::move(d));
}

/// True iff every vertex is reachable from vertex 0.
/// The empty graph (n = 0) is vacuously connected.
inline bool is_connected(const Multigraph& g) {
    int n = g.vertex_count;
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

/// Eulerian test: connected after discarding degree-0 vertices, all degrees even.
/// The empty-edge graph is rejected as a usage error.
inline bool is_eulerian(const Multigraph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("is_eulerian: graph has no edges");
    std::vector<int> deg(g.vertex_count, 0);
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int d : deg)
        if (d % 2 != 0) return false;
    int start = g.edges[0].first;
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (deg[v] > 0 && !seen[v]) return false;
    return true;
}

// The double graph: every edge duplicated. Half-edges 2i and 2i+1 are the
// two copies of base edge i.
struct DoubleGraph {
    Multigraph base;

    int half_edge_count() const { return 2 * base.edge_count(); }
    static int base_edge(int half_edge) { return half_edge / 2; }

    Multigraph as_multigraph() const {
        Multigraph d;
        d.vertex_count = base.vertex_count;
        d.edges.reserve(half_edge_count());
        for (auto [u, v] : base.edges) {
            d.edges.emplace_back(u, v);
            d.edges.emplace_back(u, v);
        }
        return d;
    }
};

inline DoubleGraph double_graph(const Multigraph& g) { return DoubleGraph{g}; }

// Small disjoint-set used across the library.
struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
    int component_count() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

}  // namespace geoplan
