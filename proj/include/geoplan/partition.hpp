#pragma once

// Eulerian partitions of double graphs: the witness objects for degree
// sequence realizability. A partition colors the 2*ell half-edges with m
// colors; it certifies a pair (d; t) when every color class is Eulerian,
// the class sizes match t, and every per-vertex link graph is connected.

#include <optional>

#include "geoplan/plan.hpp"

namespace geoplan {

// Coloring of the half-edges of a double graph. Copies 2i and 2i+1 of base
// edge i carry colors color[2i], color[2i+1] in {0..m-1}.
struct EulerianPartition {
    DoubleGraph base;
    std::vector<int> color;
    int color_count = 0;

    EulerianPartition(DoubleGraph b, std::vector<int> c, int m)
        : base(std::move(b)), color(std::move(c)), color_count(m) {
        if (static_cast<int>(color.size()) != base.half_edge_count())
            throw std::invalid_argument("partition: wrong number of colors");
        for (int j : color)
            if (j < 0 || j >= m)
                throw std::invalid_argument("partition: color out of range");
    }

    std::vector<int> class_sizes() const {
        std::vector<int> sizes(color_count, 0);
        for (int j : color) ++sizes[j];
        return sizes;
    }

    /// Number of copies of base edge e carrying color j (0, 1 or 2).
    int multiplicity(int e, int j) const {
        return (color[2 * e] == j) + (color[2 * e + 1] == j);
    }
};

/// The subgraph (V, E_j) spanned by one color class, on the full base
/// vertex set.
inline Multigraph class_subgraph(const EulerianPartition& part, int j) {
    if (j < 0 || j >= part.color_count)
        throw std::invalid_argument("class_subgraph: color out of range");
    Multigraph out;
    out.vertex_count = part.base.base.vertex_count;
    for (int h = 0; h < part.base.half_edge_count(); ++h)
        if (part.color[h] == j)
            out.edges.push_back(part.base.base.edges[DoubleGraph::base_edge(h)]);
    if (out.edge_count() == 0)
        throw std::invalid_argument("class_subgraph: color unused");
    return out;
}

inline bool is_eulerian_partition(const EulerianPartition& part) {
    auto sizes = part.class_sizes();
    for (int j = 0; j < part.color_count; ++j) {
        if (sizes[j] == 0) return false;
        if (!is_eulerian(class_subgraph(part, j))) return false;
    }
    return true;
}

inline bool is_t_partition(const EulerianPartition& part, const DegreeSequence& t) {
    auto sizes = part.class_sizes();
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return sizes == t.entries;
}

// Link graph at a vertex: colors meeting v, linked when some edge at v has
// its two copies in those two (distinct) classes.
struct LinkGraph {
    int vertex;
    std::vector<int> colors_present;
    std::vector<std::pair<int, int>> edges;  // color pairs {j, k}, j != k

    bool connected() const {
        if (colors_present.empty()) return true;
        std::vector<int> index(1 + *std::max_element(colors_present.begin(),
                                                     colors_present.end()), -1);
        for (int i = 0; i < static_cast<int>(colors_present.size()); ++i)
            index[colors_present[i]] = i;
        DisjointSet ds(static_cast<int>(colors_present.size()));
        for (auto [j, k] : edges) ds.unite(index[j], index[k]);
        return ds.component_count() == 1;
    }
};

inline LinkGraph link_graph(const EulerianPartition& part, int v) {
    const Multigraph& g = part.base.base;
    if (v < 0 || v >= g.vertex_count)
        throw std::invalid_argument("link_graph: vertex out of range");
    LinkGraph out;
    out.vertex = v;
    std::vector<char> present(part.color_count, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        if (a != v && b != v) continue;
        int j = part.color[2 * e], k = part.color[2 * e + 1];
        present[j] = present[k] = 1;
        if (j != k) out.edges.emplace_back(std::min(j, k), std::max(j, k));
    }
    for (int j = 0; j < part.color_count; ++j)
        if (present[j]) out.colors_present.push_back(j);
    return out;
}

inline bool is_locally_connected(const EulerianPartition& part) {
    for (int v = 0; v < part.base.base.vertex_count; ++v)
        if (!link_graph(part, v).connected()) return false;
    return true;
}

// ---- exhaustive search ---------------------------------------------------

namespace detail {

struct PartitionSearch {
    const Multigraph& g;
    std::vector<int> target;      // class sizes, non-increasing
    int m;
    std::vector<int> edge_order;  // base edges in assignment order
    std::vector<std::vector<int>> completes;  // edges whose assignment completes a vertex
    std::vector<int> color;       // per half-edge, -1 while unassigned
    std::vector<int> cnt;         // half-edges per color so far
    std::vector<std::vector<char>> parity;  // [v][j]: odd class degree at v so far
    std::vector<int> odd_colors;  // per vertex, count of odd-parity colors
    std::vector<int> rem;         // per vertex, unassigned non-loop copies
    std::vector<int> group_head;  // lowest color of the equal-target group

    explicit PartitionSearch(const Multigraph& graph, const DegreeSequence& t)
        : g(graph), target(t.entries), m(t.size()) {
        order_edges();
        color.assign(2 * g.edge_count(), -1);
        cnt.assign(m, 0);
        parity.assign(g.vertex_count, std::vector<char>(m, 0));
        odd_colors.assign(g.vertex_count, 0);
        rem.assign(g.vertex_count, 0);
        for (auto [u, v] : g.edges)
            if (u != v) {
                rem[u] += 2;
                rem[v] += 2;
            }
        group_head.resize(m);
        for (int j = 0; j < m; ++j)
            group_head[j] = (j > 0 && target[j] == target[j - 1]) ? group_head[j - 1] : j;
    }

    // BFS vertex order; edges sorted by the later endpoint so that each
    // vertex's incident edges finish as early as possible.
    void order_edges() {
        int n = g.vertex_count;
        std::vector<std::vector<int>> adj(n);
        for (int e = 0; e < g.edge_count(); ++e) {
            adj[g.edges[e].first].push_back(g.edges[e].second);
            adj[g.edges[e].second].push_back(g.edges[e].first);
        }
        std::vector<int> pos(n, -1);
        std::vector<int> queue{0};
        pos[0] = 0;
        for (size_t i = 0; i < queue.size(); ++i)
            for (int w : adj[queue[i]])
                if (pos[w] < 0) {
                    pos[w] = static_cast<int>(queue.size());
                    queue.push_back(w);
                }
        edge_order.resize(g.edge_count());
        std::iota(edge_order.begin(), edge_order.end(), 0);
        auto key = [&](int e) {
            auto [u, v] = g.edges[e];
            return std::tuple(std::max(pos[u], pos[v]), std::min(pos[u], pos[v]), e);
        };
        std::sort(edge_order.begin(), edge_order.end(),
                  [&](int a, int b) { return key(a) < key(b); });
        std::vector<int> last(n, -1);
        for (int i = 0; i < static_cast<int>(edge_order.size()); ++i) {
            auto [u, v] = g.edges[edge_order[i]];
            last[u] = last[v] = i;
        }
        completes.assign(g.edge_count(), {});
        for (int v = 0; v < n; ++v)
            if (last[v] >= 0) completes[last[v]].push_back(v);
    }

    void flip_parity(int v, int j) {
        parity[v][j] ^= 1;
        odd_colors[v] += parity[v][j] ? 1 : -1;
    }

    void apply(int e, int j, int k) {
        color[2 * e] = j;
        color[2 * e + 1] = k;
        ++cnt[j];
        ++cnt[k];
        auto [u, v] = g.edges[e];
        if (u != v) {
            flip_parity(u, j);
            flip_parity(v, j);
            flip_parity(u, k);
            flip_parity(v, k);
            rem[u] -= 2;
            rem[v] -= 2;
        }
    }

    void undo(int e, int j, int k) {
        auto [u, v] = g.edges[e];
        if (u != v) {
            rem[u] += 2;
            rem[v] += 2;
            flip_parity(u, k);
            flip_parity(v, k);
            flip_parity(u, j);
            flip_parity(v, j);
        }
        --cnt[j];
        --cnt[k];
        color[2 * e] = color[2 * e + 1] = -1;
    }

    bool vertex_ok(int v) {
        if (odd_colors[v] != 0) return false;
        std::vector<char> present(m, 0);
        std::vector<std::pair<int, int>> links;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edges[e];
            if (a != v && b != v) continue;
            int j = color[2 * e], k = color[2 * e + 1];
            present[j] = present[k] = 1;
            if (j != k) links.emplace_back(j, k);
        }
        DisjointSet ds(m);
        int vertices = 0;
        for (int j = 0; j < m; ++j) vertices += present[j];
        int merges = 0;
        for (auto [j, k] : links) merges += ds.unite(j, k);
        return vertices - merges == 1;
    }

    bool classes_connected() {
        for (int j = 0; j < m; ++j) {
            Multigraph sub;
            sub.vertex_count = g.vertex_count;
            for (int h = 0; h < 2 * g.edge_count(); ++h)
                if (color[h] == j)
                    sub.edges.push_back(g.edges[DoubleGraph::base_edge(h)]);
            if (sub.edge_count() == 0 || !is_eulerian(sub)) return false;
        }
        return true;
    }

    // Colors with equal targets are interchangeable: a fresh color is only
    // admitted if it is the lowest unused one in its group. `partner` is a
    // color being introduced in the same step (the other half of the pair).
    bool fresh_ok(int c, int partner) const {
        if (cnt[c] > 0 || c == group_head[c]) return true;
        return cnt[c - 1] > 0 || c - 1 == partner;
    }

    bool search(int idx) {
        if (idx == g.edge_count()) return classes_connected();
        int e = edge_order[idx];
        auto [u, v] = g.edges[e];
        bool loop = (u == v);
        for (int j = 0; j < m; ++j) {
            if (cnt[j] + 1 > target[j]) continue;
            if (!fresh_ok(j, -1)) continue;
            for (int k = j; k < m; ++k) {
                int need = (k == j) ? 2 : 1;
                if (cnt[k] + need > target[k]) continue;
                if (k != j && !fresh_ok(k, j)) continue;
                apply(e, j, k);
                bool ok = true;
                if (!loop) {
                    if (odd_colors[u] > rem[u] || odd_colors[v] > rem[v]) ok = false;
                }
                if (ok)
                    for (int w : completes[idx])
                        if (!vertex_ok(w)) {
                            ok = false;
                            break;
                        }
                if (ok && search(idx + 1)) return true;
                undo(e, j, k);
            }
        }
        return false;
    }
};

}  // namespace detail

/// Exhaustive, deterministic search for a locally connected Eulerian
/// t-partition of the double graph of g. Absence is a certificate.
inline std::optional<EulerianPartition> find_partition(const Multigraph& g,
                                                       const DegreeSequence& t) {
    if (g.edge_count() == 0 || !is_connected(g))
        throw std::invalid_argument("find_partition: graph must be connected");
    if (t.sum() != 2 * g.edge_count())
        throw std::invalid_argument("find_partition: size sum must be 2*ell");
    detail::PartitionSearch s(g, t);
    if (!s.search(0)) return std::nullopt;
    return EulerianPartition(double_graph(g), std::move(s.color), t.size());
}

/// Plan (g, h) with one h-vertex per color; edge i joins the colors of its
/// two copies. Geographic whenever the partition is admissible (Theorem-level
/// guarantee, enforced here as a precondition).
inline Plan partition_to_plan(const Multigraph& g, const EulerianPartition& part) {
    if (part.base.base.edges != g.edges || part.base.base.vertex_count != g.vertex_count)
        throw std::invalid_argument("partition_to_plan: partition is not over g");
    if (!is_eulerian_partition(part) || !is_locally_connected(part))
        throw std::invalid_argument(
            "partition_to_plan: not a locally connected Eulerian partition");
    Multigraph h;
    h.vertex_count = part.color_count;
    for (int e = 0; e < g.edge_count(); ++e)
        h.edges.emplace_back(part.color[2 * e], part.color[2 * e + 1]);
    return Plan(g, std::move(h));
}

/// Color the copies of each edge by its faces: B_H(e, f) copies get color f.
inline EulerianPartition plan_to_partition(const Plan& p) {
    if (!is_geographic(p))
        throw std::invalid_argument("plan_to_partition: plan is not geographic");
    std::vector<int> color(2 * p.edge_count());
    for (int e = 0; e < p.edge_count(); ++e) {
        auto [f1, f2] = p.h.edges[e];
        color[2 * e] = std::min(f1, f2);
        color[2 * e + 1] = std::max(f1, f2);
    }
    return EulerianPartition(double_graph(p.g), std::move(color), p.m());
}

}  // namespace geoplan
