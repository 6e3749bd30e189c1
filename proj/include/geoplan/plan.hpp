#pragma once

// Plans: pairs of multigraphs sharing one edge index set, their bimatrix
// view, the vertex-face incidence matrix, Edmonds' geographicity test and
// surface classification by Euler characteristic.

#include <array>
#include <optional>
#include <string>

#include "geoplan/multigraph.hpp"

namespace geoplan {

// Paired incidence matrices over {0,1,2}; rows are edges, every row sums to 2.
struct Bimatrix {
    std::vector<std::vector<int>> g_rows;  // ell x n
    std::vector<std::vector<int>> h_rows;  // ell x m

    int edge_count() const { return static_cast<int>(g_rows.size()); }
    int n() const { return g_rows.empty() ? 0 : static_cast<int>(g_rows[0].size()); }
    int m() const { return h_rows.empty() ? 0 : static_cast<int>(h_rows[0].size()); }

    void validate() const {
        if (g_rows.size() != h_rows.size())
            throw std::invalid_argument("bimatrix: row counts differ");
        for (auto* side : {&g_rows, &h_rows})
            for (const auto& row : *side) {
                int sum = 0;
                for (int x : row) {
                    if (x < 0 || x > 2)
                        throw std::invalid_argument("bimatrix: entry outside {0,1,2}");
                    sum += x;
                }
                if (sum != 2)
                    throw std::invalid_argument("bimatrix: row sum is not 2");
            }
    }
};

// A plan (G, H): edge i of g and edge i of h are the same plan edge.
struct Plan {
    Multigraph g;
    Multigraph h;

    Plan() = default;
    Plan(Multigraph g_, Multigraph h_) : g(std::move(g_)), h(std::move(h_)) {
        if (g.edge_count() != h.edge_count())
            throw std::invalid_argument("plan: edge counts differ");
    }

    int n() const { return g.vertex_count; }
    int m() const { return h.vertex_count; }
    int edge_count() const { return g.edge_count(); }
};

inline std::vector<int> incidence_row(const Multigraph& g, int e) {
    std::vector<int> row(g.vertex_count, 0);
    auto [u, v] = g.edges[e];
    row[u] += 1;
    row[v] += 1;
    return row;
}

inline std::pair<int, int> endpoints_from_row(const std::vector<int>& row) {
    int u = -1, v = -1;
    for (int i = 0; i < static_cast<int>(row.size()); ++i) {
        if (row[i] == 2) return {i, i};
        if (row[i] == 1) (u < 0 ? u : v) = i;
    }
    if (u < 0 || v < 0)
        throw std::invalid_argument("bimatrix: row sum is not 2");
    return {u, v};
}

inline Plan plan_from_bimatrix(const Bimatrix& b) {
    b.validate();
    Multigraph g, h;
    g.vertex_count = b.n();
    h.vertex_count = b.m();
    for (int e = 0; e < b.edge_count(); ++e) {
        g.edges.push_back(endpoints_from_row(b.g_rows[e]));
        h.edges.push_back(endpoints_from_row(b.h_rows[e]));
    }
    return Plan(std::move(g), std::move(h));
}

inline Bimatrix bimatrix_of(const Plan& p) {
    Bimatrix b;
    for (int e = 0; e < p.edge_count(); ++e) {
        b.g_rows.push_back(incidence_row(p.g, e));
        b.h_rows.push_back(incidence_row(p.h, e));
    }
    return b;
}

inline Plan dual(const Plan& p) { return Plan(p.h, p.g); }

inline int euler_characteristic(const Plan& p) {
    return p.n() - p.edge_count() + p.m();
}

// A bivector (d; t) with its edge count and Euler characteristic.
struct SequencePair {
    DegreeSequence d;
    DegreeSequence t;

    SequencePair(DegreeSequence d_, DegreeSequence t_)
        : d(std::move(d_)), t(std::move(t_)) {
        if (d.sum() != t.sum())
            throw std::invalid_argument("sequence pair: degree sums differ");
    }

    int ell() const { return d.sum() / 2; }
    int chi() const { return d.size() - ell() + t.size(); }

    SequencePair transposed() const { return SequencePair(t, d); }

    bool operator==(const SequencePair& o) const { return d == o.d && t == o.t; }
    auto operator<=>(const SequencePair& o) const {
        if (auto c = d <=> o.d; c != 0) return c;
        return t <=> o.t;
    }
};

inline SequencePair sequence_pair_of(const Plan& p) {
    return SequencePair(degree_sequence(p.g), degree_sequence(p.h));
}

// S_p (orientable, chi = 2-2p) or C_q (non-orientable, chi = 2-q).
struct SurfaceClass {
    bool orientable;
    int genus;  // p for S_p, q for C_q

    int chi() const { return orientable ? 2 - 2 * genus : 2 - genus; }

    std::string name() const {
        return (orientable ? "S_" : "C_") + std::to_string(genus);
    }

    std::string description() const {
        if (orientable) {
            if (genus == 0) return "sphere";
            if (genus == 1) return "torus";
            return "orientable surface of genus " + std::to_string(genus);
        }
        if (genus == 1) return "projective plane";
        if (genus == 2) return "Klein bottle";
        return "non-orientable surface with " + std::to_string(genus) + " crosscaps";
    }

    bool operator==(const SurfaceClass& o) const = default;
    auto operator<=>(const SurfaceClass& o) const = default;
};

/// The at-most-two surfaces with the given Euler characteristic.
inline std::vector<SurfaceClass> candidate_surfaces(int chi) {
    std::vector<SurfaceClass> out;
    if (chi > 2) return out;
    if (chi % 2 == 0) out.push_back(SurfaceClass{true, (2 - chi) / 2});
    if (chi < 2) out.push_back(SurfaceClass{false, 2 - chi});
    return out;
}

// A local subgraph of one side of a plan, keeping track of which base
// vertices and edges its re-indexed vertices/edges came from. Duplicated
// edges repeat their base edge id.
struct LocalGraph {
    Multigraph graph;
    std::vector<int> vertex_ids;  // local vertex -> base vertex
    std::vector<int> edge_ids;    // local edge -> plan edge index
};

namespace detail {

inline LocalGraph local_graph(const Multigraph& here, const Multigraph& there,
                              int v) {
    // Edges of `there` incident with v in `here`; copies of `here`-loops doubled.
    LocalGraph out;
    std::vector<int> local(there.vertex_count, -1);
    auto local_vertex = [&](int w) {
        if (local[w] < 0) {
            local[w] = static_cast<int>(out.vertex_ids.size());
            out.vertex_ids.push_back(w);
        }
        return local[w];
    };
    for (int e = 0; e < here.edge_count(); ++e) {
        auto [a, b] = here.edges[e];
        if (a != v && b != v) continue;
        int copies = (a == b) ? 2 : 1;
        auto [x, y] = there.edges[e];
        int lx = local_vertex(x), ly = local_vertex(y);
        for (int c = 0; c < copies; ++c) {
            out.graph.edges.emplace_back(lx, ly);
            out.edge_ids.push_back(e);
        }
    }
    out.graph.vertex_count = static_cast<int>(out.vertex_ids.size());
    return out;
}

}  // namespace detail

/// Vertex graph H_v: subgraph of h on the faces incident with v, with every
/// edge that is a loop at v in g duplicated.
inline LocalGraph vertex_graph(const Plan& p, int v) {
    if (v < 0 || v >= p.n())
        throw std::invalid_argument("vertex_graph: vertex out of range");
    return detail::local_graph(p.g, p.h, v);
}

/// Face graph G_f: dual construction of vertex_graph.
inline LocalGraph face_graph(const Plan& p, int f) {
    if (f < 0 || f >= p.m())
        throw std::invalid_argument("face_graph: face out of range");
    return detail::local_graph(p.h, p.g, f);
}

/// B_{G,H} = B_G^T B_H; entry (v,f) equals d_{H_v}(f) and d_{G_f}(v).
inline std::vector<std::vector<int>> vertex_face_incidence(const Plan& p) {
    std::vector<std::vector<int>> b(p.n(), std::vector<int>(p.m(), 0));
    for (int e = 0; e < p.edge_count(); ++e) {
        auto [gu, gv] = p.g.edges[e];
        auto [hu, hv] = p.h.edges[e];
        // row_G(e) has 1 at gu and gv (2 if equal); same for H.
        b[gu][hu] += 1;
        b[gu][hv] += 1;
        b[gv][hu] += 1;
        b[gv][hv] += 1;
    }
    return b;
}

inline bool is_even(const Plan& p) {
    for (const auto& row : vertex_face_incidence(p))
        for (int x : row)
            if (x % 2 != 0) return false;
    return true;
}

inline bool is_locally_eulerian(const Plan& p) {
    for (int v = 0; v < p.n(); ++v) {
        auto hv = vertex_graph(p, v);
        if (hv.graph.edge_count() == 0 || !is_eulerian(hv.graph)) return false;
    }
    for (int f = 0; f < p.m(); ++f) {
        auto gf = face_graph(p, f);
        if (gf.graph.edge_count() == 0 || !is_eulerian(gf.graph)) return false;
    }
    return true;
}

/// Edmonds' criterion: geographic iff connected and locally Eulerian.
inline bool is_geographic(const Plan& p) {
    return is_connected(p.g) && is_connected(p.h) && is_locally_eulerian(p);
}

// ---- canonical form ------------------------------------------------------
//
// A plan is determined by its bimatrix up to column permutations of each
// side and a simultaneous row permutation. The canonical form fixes a
// primary column order by descending degree and minimizes lexicographically
// over permutations within equal-degree classes, with rows sorted last.

namespace detail {

inline std::vector<std::vector<int>> degree_classes(const Multigraph& g) {
    std::vector<int> deg(g.vertex_count, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<int> order(g.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    std::vector<std::vector<int>> classes;
    for (int v : order) {
        if (classes.empty() || deg[classes.back().front()] != deg[v])
            classes.push_back({});
        classes.back().push_back(v);
    }
    return classes;
}

// Enumerate products of permutations within each class, invoking fn with the
// full column order.
template <typename Fn>
void for_each_class_permutation(std::vector<std::vector<int>> classes, Fn&& fn) {
    std::vector<int> order;
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            fn(order);
            return;
        }
        auto& cls = classes[ci];
        std::sort(cls.begin(), cls.end());
        do {
            order.insert(order.end(), cls.begin(), cls.end());
            self(self, ci + 1);
            order.resize(order.size() - cls.size());
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    rec(rec, 0);
}

}  // namespace detail

/// Lexicographically minimal flattened bimatrix over degree-preserving column
/// permutations of both sides and free row permutation. Intended for
/// desk-scale deduplication and isomorphism checks.
inline std::vector<int> canonical_bimatrix(const Plan& p) {
    Bimatrix b = bimatrix_of(p);
    int ell = b.edge_count();
    std::vector<int> best;
    auto g_classes = detail::degree_classes(p.g);
    auto h_classes = detail::degree_classes(p.h);
    detail::for_each_class_permutation(g_classes, [&](const std::vector<int>& gorder) {
        detail::for_each_class_permutation(h_classes, [&](const std::vector<int>& horder) {
            std::vector<std::vector<int>> rows(ell);
            for (int e = 0; e < ell; ++e) {
                auto& row = rows[e];
                row.reserve(p.n() + p.m());
                for (int c : gorder) row.push_back(b.g_rows[e][c]);
                for (int c : horder) row.push_back(b.h_rows[e][c]);
            }
            std::sort(rows.begin(), rows.end());
            std::vector<int> flat;
            flat.reserve(ell * (p.n() + p.m()));
            for (auto& row : rows)
                flat.insert(flat.end(), row.begin(), row.end());
            if (best.empty() || flat < best) best = std::move(flat);
        });
    });
    return best;
}

inline bool plans_isomorphic(const Plan& a, const Plan& b) {
    if (a.n() != b.n() || a.m() != b.m() || a.edge_count() != b.edge_count())
        return false;
    return canonical_bimatrix(a) == canonical_bimatrix(b);
}

}  // namespace geoplan
