#pragma once

// Shared test utilities: deliberately naive reference enumerators used as
// independent oracles for the optimized engines, plus small builders.

#include <map>
#include <random>
#include <set>
#include <string>

#include "geoplan/enumerate.hpp"
#include "geoplan/io.hpp"
#include "geoplan/mapbuild.hpp"

namespace testutil {

inline geoplan::Multigraph mg(int n, std::vector<std::pair<int, int>> edges) {
    return geoplan::Multigraph(n, std::move(edges));
}

inline geoplan::Plan plan_of(const std::string& bimatrix_text) {
    return geoplan::plan_from_bimatrix(geoplan::parse_bimatrix(bimatrix_text));
}

/// Every multigraph on n labeled vertices with ell edges, as non-decreasing
/// edge lists (one per edge multiset).
template <typename Fn>
void for_each_edge_multiset(int n, int ell, Fn&& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<std::pair<int, int>> edges;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(edges.size()) == ell) {
            fn(geoplan::Multigraph(n, edges));
            return;
        }
        for (size_t i = from; i < pairs.size(); ++i) {
            edges.push_back(pairs[i]);
            self(self, i);
            edges.pop_back();
        }
    };
    rec(rec, 0);
}

/// Naive realization enumeration: brute force over all edge multisets,
/// keeping the connected ones with the requested degree sequence.
inline std::vector<geoplan::Multigraph> naive_realizations(
    const geoplan::DegreeSequence& d) {
    std::vector<geoplan::Multigraph> out;
    for_each_edge_multiset(d.size(), d.sum() / 2, [&](geoplan::Multigraph g) {
        if (!geoplan::is_connected(g)) return;
        // Labeled comparison: vertex i must have degree d.entries[i], matching
        // the enumeration contract of enumerate_realizations.
        std::vector<int> deg(g.vertex_count, 0);
        for (auto [u, v] : g.edges) {
            ++deg[u];
            ++deg[v];
        }
        if (deg == d.entries) out.push_back(std::move(g));
    });
    return out;
}

/// Naive census: no pruning, no parity packing, no symmetry breaking.
/// Dual sides are built as multisets of arbitrary nonzero {0,1,2}^ell columns
/// with every row summing to 2; each surviving plan is checked directly.
struct NaiveCensus {
    std::set<geoplan::SequencePair> feasible;
    std::set<geoplan::SequencePair> realizable;
};

inline NaiveCensus naive_census(int ell, bool strict) {
    NaiveCensus out;
    int n_max = ell / 2 + 1;
    for (int n = 1; n <= n_max; ++n)
        geoplan::detail::for_each_partition(2 * ell, n, [&](const std::vector<int>& d) {
            for (int m = n; m <= ell + n - 2; ++m)
                geoplan::detail::for_each_partition(
                    2 * ell, m, [&](const std::vector<int>& t) {
                        out.feasible.emplace(geoplan::DegreeSequence(d),
                                             geoplan::DegreeSequence(t));
                    });
        });

    // All nonzero columns of {0,1,2}^ell.
    std::vector<std::vector<int>> columns;
    {
        std::vector<int> col(ell, 0);
        auto rec = [&](auto&& self, int e) -> void {
            if (e == ell) {
                for (int x : col)
                    if (x) {
                        columns.push_back(col);
                        return;
                    }
                return;
            }
            for (int x = 0; x <= 2; ++x) {
                col[e] = x;
                self(self, e + 1);
            }
            col[e] = 0;
        };
        rec(rec, 0);
    }

    for (int n = 1; n <= n_max; ++n)
        for_each_edge_multiset(n, ell, [&](const geoplan::Multigraph& g) {
            if (!geoplan::is_connected(g)) return;
            geoplan::DegreeSequence d = geoplan::degree_sequence(g);
            for (int m = n; m <= ell + n - 2; ++m) {
                std::vector<int> chosen;
                auto rec = [&](auto&& self, size_t from) -> void {
                    if (static_cast<int>(chosen.size()) == m) {
                        std::vector<int> row_sum(ell, 0);
                        for (int c : chosen)
                            for (int e = 0; e < ell; ++e) row_sum[e] += columns[c][e];
                        for (int e = 0; e < ell; ++e)
                            if (row_sum[e] != 2) return;
                        geoplan::Bimatrix b;
                        for (int e = 0; e < ell; ++e) {
                            b.g_rows.push_back(geoplan::incidence_row(g, e));
                            std::vector<int> h_row;
                            for (int c : chosen) h_row.push_back(columns[c][e]);
                            b.h_rows.push_back(std::move(h_row));
                        }
                        geoplan::Plan p = geoplan::plan_from_bimatrix(b);
                        if (!geoplan::is_connected(p.h)) return;
                        if (strict && !geoplan::is_geographic(p)) return;
                        out.realizable.emplace(d, geoplan::degree_sequence(p.h));
                        return;
                    }
                    for (size_t i = from; i < columns.size(); ++i) {
                        chosen.push_back(static_cast<int>(i));
                        self(self, i);
                        chosen.pop_back();
                    }
                };
                rec(rec, 0);
            }
        });
    return out;
}

/// Every plan (g, h) with g a connected realization inside the census window
/// and h an arbitrary multigraph on m faces with no isolated face.
template <typename Fn>
void for_each_window_plan(int ell, Fn&& fn) {
    int n_max = ell / 2 + 1;
    for (int n = 1; n <= n_max; ++n)
        geoplan::detail::for_each_partition(2 * ell, n, [&](const std::vector<int>& dv) {
            geoplan::DegreeSequence d(dv);
            geoplan::for_each_realization(d, [&](geoplan::Multigraph g) {
                for (int m = 1; m <= ell + n - 2; ++m) {
                    geoplan::Multigraph h;
                    h.vertex_count = m;
                    std::vector<int> touched(m, 0);
                    auto rec = [&](auto&& self, int e) -> void {
                        if (e == ell) {
                            for (int v = 0; v < m; ++v)
                                if (!touched[v]) return;
                            fn(geoplan::Plan(g, h));
                            return;
                        }
                        for (int a = 0; a < m; ++a)
                            for (int b = a; b < m; ++b) {
                                h.edges.emplace_back(a, b);
                                ++touched[a];
                                ++touched[b];
                                self(self, e + 1);
                                --touched[a];
                                --touched[b];
                                h.edges.pop_back();
                            }
                    };
                    rec(rec, 0);
                }
                return true;
            });
        });
}

/// Orientability by brute force: some subset of polygon reflections makes
/// every letter occur once plain and once barred.
inline bool brute_force_orientable(const geoplan::WordRepresentation& w) {
    int polys = static_cast<int>(w.polygons.size());
    for (int mask = 0; mask < (1 << polys); ++mask) {
        std::map<int, std::pair<int, int>> seen;  // letter -> (plain, barred)
        for (int p = 0; p < polys; ++p)
            for (geoplan::Letter letter : w.polygons[p]) {
                if (mask & (1 << p)) letter.bar = !letter.bar;
                auto& s = seen[letter.edge];
                (letter.bar ? s.second : s.first) += 1;
            }
        bool ok = true;
        for (auto& [edge, s] : seen)
            if (s.first != 1 || s.second != 1) ok = false;
        if (ok) return true;
    }
    return false;
}

inline geoplan::SequencePair random_feasible_pair(std::mt19937& rng, int max_ell) {
    std::uniform_int_distribution<int> ell_dist(1, max_ell);
    int ell = ell_dist(rng);
    auto random_partition = [&](int total) {
        std::vector<int> parts;
        while (total > 0) {
            std::uniform_int_distribution<int> part(1, total);
            int x = part(rng);
            parts.push_back(x);
            total -= x;
        }
        return parts;
    };
    return geoplan::SequencePair(geoplan::DegreeSequence(random_partition(2 * ell)),
                                 geoplan::DegreeSequence(random_partition(2 * ell)));
}

}  // namespace testutil
