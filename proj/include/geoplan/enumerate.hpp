#pragma once

// Exhaustive enumeration engines: connected realizations of a degree
// sequence, dual-side completion of an incidence matrix, the bivector
// census over all plans with a given edge count, and the realizability
// decision for a single pair of degree sequences.
//
// The census windows (n up to floor(ell/2)+1, n <= m <= ell+n-2) are kept
// exactly as stated; pairs outside them are simply not part of the census
// universe. is_realizable has no such window.

#include <atomic>
#include <bit>
#include <cstdint>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "geoplan/errors.hpp"
#include "geoplan/partition.hpp"

namespace geoplan {

struct SearchConfig {
    int ell = 0;
    bool strict = true;  // false: evenness + connectivity filter only
    int workers = 1;
};

struct CensusStats {
    long long plans_enumerated = 0;
    double wall_seconds = 0.0;
};

struct BivectorCensus {
    int ell = 0;
    bool strict = true;
    std::vector<SequencePair> all_feasible;
    std::vector<SequencePair> realizable;
    std::vector<SequencePair> non_realizable;
    CensusStats stats;
};

namespace detail {

/// All non-increasing sequences of `parts` positive integers summing to
/// `total`, in decreasing lexicographic order of generation.
template <typename Fn>
void for_each_partition(int total, int parts, Fn&& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int slots, int cap) -> void {
        if (slots == 0) {
            if (left == 0) fn(cur);
            return;
        }
        int hi = std::min(left - (slots - 1), cap);
        for (int x = hi; x >= 1; --x) {
            cur.push_back(x);
            self(self, left - x, slots - 1, x);
            cur.pop_back();
        }
    };
    rec(rec, total, parts, total);
}

}  // namespace detail

/// Every connected multigraph whose vertex v has degree d.entries[v],
/// each edge multiset exactly once (edges generated in non-decreasing
/// lexicographic order). fn returns false to stop early; the function
/// returns false iff stopped.
template <typename Fn>
bool for_each_realization(const DegreeSequence& d, Fn&& fn) {
    int n = d.size();
    std::vector<int> residual = d.entries;
    std::vector<std::pair<int, int>> edges;
    auto rec = [&](auto&& self) -> bool {
        int u = 0;
        while (u < n && residual[u] == 0) ++u;
        if (u == n) {
            Multigraph g(n, edges);
            if (is_connected(g)) return fn(std::move(g));
            return true;
        }
        // Lexicographic order forces the next edge to start at the lowest
        // vertex with unmet degree; its partner respects the previous edge.
        int start = u;
        if (!edges.empty() && edges.back().first == u)
            start = std::max(start, edges.back().second);
        for (int v = start; v < n; ++v) {
            int need = (v == u) ? 2 : 1;
            if (residual[v] < need || (v == u && residual[u] < 2)) continue;
            residual[u] -= 1;
            residual[v] -= 1;
            edges.emplace_back(u, v);
            bool keep = self(self);
            edges.pop_back();
            residual[u] += 1;
            residual[v] += 1;
            if (!keep) return false;
        }
        return true;
    };
    return rec(rec);
}

inline std::vector<Multigraph> enumerate_realizations(const DegreeSequence& d) {
    std::vector<Multigraph> out;
    for_each_realization(d, [&](Multigraph g) {
        out.push_back(std::move(g));
        return true;
    });
    return out;
}

namespace detail {

// One dual-side column, packed for the parity test: bit e of `ones`/`twos`
// set when the column has entry 1/2 at edge e.
struct PackedColumn {
    std::uint32_t ones = 0;
    std::uint32_t twos = 0;
    int first_row = 0;
    int first_entry = 0;  // 1 or 2

    int entry(int e) const {
        return ((ones >> e) & 1u) + 2 * ((twos >> e) & 1u);
    }
};

/// Nonzero columns in {0,1,2}^ell whose scalar product with every vertex
/// column of B_G is even. Only 1*1 products are odd, so the test is a
/// popcount parity over the non-loop incidences of each vertex.
inline std::vector<PackedColumn> packed_even_columns(const Multigraph& g) {
    int ell = g.edge_count();
    if (ell > 31) throw std::invalid_argument("even columns: too many edges");
    std::vector<std::uint32_t> vertex_ones(g.vertex_count, 0);
    for (int e = 0; e < ell; ++e) {
        auto [u, v] = g.edges[e];
        if (u != v) {
            vertex_ones[u] |= 1u << e;
            vertex_ones[v] |= 1u << e;
        }
    }
    std::vector<PackedColumn> out;
    std::vector<int> entries(ell, 0);
    auto emit = [&] {
        PackedColumn c;
        for (int e = 0; e < ell; ++e) {
            if (entries[e] == 1) c.ones |= 1u << e;
            if (entries[e] == 2) c.twos |= 1u << e;
        }
        if (!c.ones && !c.twos) return;
        for (std::uint32_t mask : vertex_ones)
            if (std::popcount(c.ones & mask) & 1) return;
        for (int e = 0;; ++e)
            if (entries[e]) {
                c.first_row = e;
                c.first_entry = entries[e];
                break;
            }
        out.push_back(c);
    };
    auto rec = [&](auto&& self, int e) -> void {
        if (e == ell) {
            emit();
            return;
        }
        for (int x = 0; x <= 2; ++x) {
            entries[e] = x;
            self(self, e + 1);
        }
        entries[e] = 0;
    };
    rec(rec, 0);
    // Group by first nonzero row, then by packed value, for the row-driven
    // multiset enumeration.
    std::sort(out.begin(), out.end(), [](const PackedColumn& a, const PackedColumn& b) {
        return std::tuple(a.first_row, a.twos, a.ones) <
               std::tuple(b.first_row, b.twos, b.ones);
    });
    return out;
}

// Row-driven enumeration of all column multisets with every row summing to
// exactly 2. Each multiset is produced once: at row r only columns whose
// first nonzero row is r can close the deficit, and at most two of them fit.
template <typename Leaf>
struct DualEnumerator {
    const Multigraph& g;
    int ell;
    int max_m;
    std::vector<PackedColumn> cols;
    std::vector<int> group_begin;  // per row, range [begin, end) into cols
    std::vector<int> group_end;
    std::vector<int> acc;      // running row sums
    std::vector<int> chosen;   // indices into cols, with repetition
    Leaf& leaf;

    DualEnumerator(const Multigraph& graph, int max_cols, Leaf& fn)
        : g(graph), ell(graph.edge_count()), max_m(max_cols), leaf(fn) {
        cols = packed_even_columns(g);
        group_begin.assign(ell, 0);
        group_end.assign(ell, 0);
        for (int r = 0, i = 0; r < ell; ++r) {
            group_begin[r] = i;
            while (i < static_cast<int>(cols.size()) && cols[i].first_row == r) ++i;
            group_end[r] = i;
        }
        acc.assign(ell, 0);
    }

    bool fits(const PackedColumn& c) const {
        for (std::uint32_t bits = c.ones; bits; bits &= bits - 1)
            if (acc[std::countr_zero(bits)] > 1) return false;
        for (std::uint32_t bits = c.twos; bits; bits &= bits - 1)
            if (acc[std::countr_zero(bits)] > 0) return false;
        return true;
    }

    void add(const PackedColumn& c, int sign) {
        for (std::uint32_t bits = c.ones; bits; bits &= bits - 1)
            acc[std::countr_zero(bits)] += sign;
        for (std::uint32_t bits = c.twos; bits; bits &= bits - 1)
            acc[std::countr_zero(bits)] += 2 * sign;
    }

    void run() { rec(0); }

    void rec(int r) {
        if (r == ell) {
            leaf(chosen, cols);
            return;
        }
        int deficit = 2 - acc[r];
        if (deficit == 0) {
            rec(r + 1);
            return;
        }
        if (static_cast<int>(chosen.size()) >= max_m) return;
        for (int i = group_begin[r]; i < group_end[r]; ++i) {
            const PackedColumn& c = cols[i];
            if (c.first_entry == deficit) {
                if (!fits(c)) continue;
                add(c, +1);
                chosen.push_back(i);
                rec(r + 1);
                chosen.pop_back();
                add(c, -1);
            } else if (c.first_entry == 1 && deficit == 2) {
                // An unordered pair of entry-1 columns (repetition allowed).
                if (!fits(c)) continue;
                add(c, +1);
                chosen.push_back(i);
                if (static_cast<int>(chosen.size()) < max_m)
                    for (int j = i; j < group_end[r]; ++j) {
                        const PackedColumn& c2 = cols[j];
                        if (c2.first_entry != 1 || !fits(c2)) continue;
                        add(c2, +1);
                        chosen.push_back(j);
                        rec(r + 1);
                        chosen.pop_back();
                        add(c2, -1);
                    }
                chosen.pop_back();
                add(c, -1);
            }
        }
    }
};

/// The dual graph named by a chosen column multiset: one vertex per chosen
/// column, edges read off the rows.
inline Multigraph dual_from_columns(int ell, const std::vector<int>& chosen,
                                    const std::vector<PackedColumn>& cols) {
    Multigraph h;
    h.vertex_count = static_cast<int>(chosen.size());
    h.edges.reserve(ell);
    for (int e = 0; e < ell; ++e) {
        int a = -1, b = -1;
        for (int p = 0; p < static_cast<int>(chosen.size()); ++p) {
            int x = cols[chosen[p]].entry(e);
            if (x == 2) {
                a = b = p;
                break;
            }
            if (x == 1) (a < 0 ? a : b) = p;
        }
        h.edges.emplace_back(a, b);
    }
    return h;
}

/// True when the vertex labels are lexicographically minimal among
/// degree-preserving relabelings; used to skip isomorphic realizations.
inline bool is_min_labeling(const Multigraph& g) {
    auto classes = degree_classes(g);
    std::vector<std::pair<int, int>> base = g.edges;
    for (auto& [u, v] : base)
        if (u > v) std::swap(u, v);
    std::sort(base.begin(), base.end());
    bool minimal = true;
    for_each_class_permutation(classes, [&](const std::vector<int>& order) {
        if (!minimal) return;
        // order[i] is the vertex placed at position i; invert to relabel.
        std::vector<int> relabel(order.size());
        for (int i = 0; i < static_cast<int>(order.size()); ++i)
            relabel[order[i]] = i;
        std::vector<std::pair<int, int>> perm;
        perm.reserve(g.edges.size());
        for (auto [u, v] : g.edges) {
            int a = relabel[u], b = relabel[v];
            perm.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(perm.begin(), perm.end());
        if (perm < base) minimal = false;
    });
    return minimal;
}

}  // namespace detail

/// All vectors in {0,1,2}^ell with even scalar product against every vertex
/// column of g's incidence matrix. The zero vector qualifies; it is excluded
/// later by the row-sum-2 constraint during dual assembly.
inline std::vector<std::vector<int>> even_column_candidates(const Multigraph& g) {
    std::vector<std::vector<int>> out;
    out.emplace_back(g.edge_count(), 0);
    for (const auto& c : detail::packed_even_columns(g)) {
        std::vector<int> col(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) col[e] = c.entry(e);
        out.push_back(std::move(col));
    }
    return out;
}

/// All plans (g, h) with exactly m faces passing the mode's filter.
inline std::vector<Plan> enumerate_duals(const Multigraph& g, int m,
                                         const SearchConfig& cfg) {
    std::vector<Plan> out;
    auto leaf = [&](const std::vector<int>& chosen,
                    const std::vector<detail::PackedColumn>& cols) {
        if (static_cast<int>(chosen.size()) != m) return;
        Multigraph h = detail::dual_from_columns(g.edge_count(), chosen, cols);
        if (!is_connected(h)) return;
        Plan p(g, std::move(h));
        if (cfg.strict && !is_geographic(p)) return;
        out.push_back(std::move(p));
    };
    detail::DualEnumerator<decltype(leaf)> en(g, m, leaf);
    en.run();
    return out;
}

/// The full bivector census at cfg.ell: enumerate every connected g inside
/// the n-window, complete it on the dual side in every admissible way, and
/// collect the degree-sequence pairs of the surviving plans. Deterministic
/// for any worker count.
inline BivectorCensus census(const SearchConfig& cfg) {
    if (cfg.ell < 1) throw std::invalid_argument("census: ell must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    int ell = cfg.ell;
    int n_max = ell / 2 + 1;

    BivectorCensus out;
    out.ell = ell;
    out.strict = cfg.strict;

    std::set<SequencePair> feasible;
    for (int n = 1; n <= n_max; ++n)
        detail::for_each_partition(2 * ell, n, [&](const std::vector<int>& d) {
            for (int m = n; m <= ell + n - 2; ++m)
                detail::for_each_partition(2 * ell, m, [&](const std::vector<int>& t) {
                    feasible.emplace(DegreeSequence(d), DegreeSequence(t));
                });
        });

    struct Task {
        DegreeSequence d;
        Multigraph g;
    };
    std::vector<Task> tasks;
    for (int n = 1; n <= n_max; ++n)
        detail::for_each_partition(2 * ell, n, [&](const std::vector<int>& dv) {
            DegreeSequence d(dv);
            for_each_realization(d, [&](Multigraph g) {
                if (detail::is_min_labeling(g)) tasks.push_back({d, std::move(g)});
                return true;
            });
        });

    std::set<SequencePair> realizable;
    std::mutex mu;
    std::atomic<long long> plans{0};
    std::atomic<size_t> next{0};

    auto work = [&] {
        long long local_plans = 0;
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& task = tasks[i];
            int n = task.d.size();
            auto leaf = [&](const std::vector<int>& chosen,
                            const std::vector<detail::PackedColumn>& cols) {
                ++local_plans;
                int m = static_cast<int>(chosen.size());
                if (m < n) return;
                Multigraph h =
                    detail::dual_from_columns(ell, chosen, cols);
                if (!is_connected(h)) return;
                SequencePair pair(task.d, degree_sequence(h));
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (realizable.count(pair)) return;
                }
                if (cfg.strict && !is_geographic(Plan(task.g, h))) return;
                std::lock_guard<std::mutex> lock(mu);
                realizable.insert(std::move(pair));
            };
            detail::DualEnumerator<decltype(leaf)> en(task.g, ell + n - 2, leaf);
            en.run();
        }
        plans += local_plans;
    };

    int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    out.all_feasible.assign(feasible.begin(), feasible.end());
    for (const auto& pair : out.all_feasible)
        (realizable.count(pair) ? out.realizable : out.non_realizable).push_back(pair);
    out.stats.plans_enumerated = plans.load();
    out.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

// Realizability of a single pair, decided through the partition criterion:
// some connected realization of one side admits a locally connected Eulerian
// partition with the other side's class sizes.
struct RealizeVerdict {
    bool realizable = false;
    std::optional<Multigraph> realization;       // realizes the searched side
    std::optional<EulerianPartition> partition;  // class sizes = other side
    std::optional<Plan> plan;                    // degree sequences (d; t)
    bool searched_transposed = false;            // realization is of t, not d
    long long realizations_tried = 0;
};

inline RealizeVerdict is_realizable(const SequencePair& pair) {
    RealizeVerdict v;
    // Realize the side with the cheaper enumeration: fewer vertices, and on
    // ties the one with the larger maximum degree (more loops, fewer graphs).
    v.searched_transposed =
        pair.t.size() < pair.d.size() ||
        (pair.t.size() == pair.d.size() && pair.t.max_entry() > pair.d.max_entry());
    const DegreeSequence& base = v.searched_transposed ? pair.t : pair.d;
    const DegreeSequence& other = v.searched_transposed ? pair.d : pair.t;
    for_each_realization(base, [&](Multigraph g) {
        ++v.realizations_tried;
        auto part = find_partition(g, other);
        if (!part) return true;
        Plan p = partition_to_plan(g, *part);
        v.realizable = true;
        v.plan = v.searched_transposed ? dual(p) : p;
        v.realization = std::move(g);
        v.partition = std::move(*part);
        return false;
    });
    return v;
}

}  // namespace geoplan
