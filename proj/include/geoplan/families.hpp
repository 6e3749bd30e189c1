#pragma once

// Parametric families of degree sequence pairs with known verdicts:
// constructive witnesses for the realizable ones, exhaustive-search
// confirmation for the non-realizable ones, and generation of all family
// instances up to an edge budget.

#include <map>
#include <string>

#include "geoplan/enumerate.hpp"

namespace geoplan {

struct FamilyInstance {
    std::string family;
    std::map<std::string, int> params;
    std::vector<int> t_list;  // prop-5.3 only: the prescribed t sequence
    SequencePair pair;
    bool realizable = false;
    int chi = 0;
};

inline const std::vector<std::string>& family_ids() {
    static const std::vector<std::string> ids = {
        "prop-4.1", "prop-4.2", "prop-4.3", "prop-5.1", "prop-5.2",
        "prop-5.3", "prop-5.4", "prop-5.5", "prop-5.6", "prop-5.7",
        "prop-5.8", "prop-5.9", "thm-6.1",  "sporadic"};
    return ids;
}

namespace detail {

inline int family_param(const std::map<std::string, int>& params,
                        const std::string& family, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument(family + ": missing parameter " + name);
    return it->second;
}

inline void family_require(bool ok, const std::string& family,
                           const std::string& constraint) {
    if (!ok)
        throw std::invalid_argument(family + ": constraint violated: " + constraint);
}

/// (head..., value^count) sequence builder.
inline std::vector<int> seq(std::vector<int> head, int value, int count) {
    for (int i = 0; i < count; ++i) head.push_back(value);
    return head;
}

}  // namespace detail

inline FamilyInstance make_instance(const std::string& family,
                                    std::map<std::string, int> params,
                                    std::vector<int> t_list = {}) {
    using detail::family_param;
    using detail::family_require;
    using detail::seq;

    auto done = [&](std::vector<int> d, std::vector<int> t, bool realizable,
                    int expected_chi) {
        FamilyInstance inst{family, std::move(params), std::move(t_list),
                            SequencePair(DegreeSequence(std::move(d)),
                                         DegreeSequence(std::move(t))),
                            realizable, expected_chi};
        if (inst.pair.chi() != expected_chi)
            throw std::logic_error(family + ": chi mismatch");
        return inst;
    };

    if (family == "prop-4.1") {
        int n = family_param(params, family, "n");
        family_require(n >= 4, family, "n >= 4");
        return done({n, n}, seq({5, 3}, 2, n - 4), true, 0);
    }
    if (family == "prop-4.2") {
        int n = family_param(params, family, "n");
        family_require(n >= 3, family, "n >= 3");
        return done({n, n, n, n}, seq({7, 5}, 2, n == 3 ? 0 : 2 * n - 6), true, 0);
    }
    if (family == "prop-4.3") {
        int n = family_param(params, family, "n");
        int k = family_param(params, family, "k");
        int a = family_param(params, family, "a");
        family_require(k >= 1, family, "k >= 1");
        family_require(a >= 4 && a % 2 == 0, family, "a >= 4 and a even");
        family_require(n >= a, family, "n >= a");
        return done(std::vector<int>(2 * k, n),
                    seq({a * k + 1, a * k - 1}, 2, k * (n - a)), true,
                    2 - (a - 2) * k);
    }
    if (family == "prop-5.1") {
        int a = family_param(params, family, "a");
        int b = family_param(params, family, "b");
        family_require(a > b && b >= 1, family, "a > b >= 1");
        family_require((a + b) % 2 == 0, family, "a + b even");
        return done({a, b}, std::vector<int>((a + b) / 2, 2), false, 2);
    }
    if (family == "prop-5.2") {
        int n = family_param(params, family, "n");
        family_require(n >= 2, family, "n >= 2");
        return done(seq(seq({3}, 2, n - 2), 1, 1), {n, n}, false, 2);
    }
    if (family == "prop-5.3") {
        int a = family_param(params, family, "a");
        int b = family_param(params, family, "b");
        family_require(a >= 2 && b >= 2, family, "a >= 2 and b >= 2");
        family_require(static_cast<int>(t_list.size()) == a, family,
                       "t has exactly a entries");
        int sum = 0;
        for (int x : t_list) {
            family_require(x >= 2 && x % 2 == 0, family, "t entries positive and even");
            sum += x;
        }
        family_require(sum == 2 * (a + b), family, "sum of t equals 2(a+b)");
        return done(seq({2 * a + b - 1}, 1, b + 1), t_list, false, 2);
    }
    if (family == "prop-5.4") {
        int a = family_param(params, family, "a");
        int b = family_param(params, family, "b");
        family_require(a >= 0 && b >= 0, family, "a >= 0 and b >= 0");
        family_require(b < a + 3 && a + 3 <= 2 * b, family, "b < a+3 <= 2b");
        return done(seq({3, 3}, 2, a), {a + 3, b, a + 3 - b}, false, 2);
    }
    if (family == "prop-5.5") {
        int a = family_param(params, family, "a");
        int alpha = family_param(params, family, "alpha");
        int beta = family_param(params, family, "beta");
        family_require(a >= 1, family, "a >= 1");
        family_require(alpha >= beta && beta >= 1, family, "alpha >= beta >= 1");
        family_require(alpha + beta != a + 2, family, "alpha + beta != a+2");
        family_require(2 * alpha + beta <= 2 * (a + 2), family,
                       "alpha + beta/2 <= a+2");
        family_require(2 * a + 4 - alpha - beta >= 1, family,
                       "2a+4-(alpha+beta) >= 1");
        return done({2 * a + 4 - alpha - beta, alpha, beta}, seq({4}, 2, a),
                    false, 2);
    }
    if (family == "prop-5.6") {
        int a = family_param(params, family, "a");
        int alpha = family_param(params, family, "alpha");
        int beta = family_param(params, family, "beta");
        int gamma = family_param(params, family, "gamma");
        int delta = family_param(params, family, "delta");
        family_require(a >= 1, family, "a >= 1");
        family_require(alpha >= beta && beta >= gamma && gamma >= delta && delta >= 1,
                       family, "alpha >= beta >= gamma >= delta >= 1");
        family_require(alpha + beta + gamma + delta == 2 * a + 6, family,
                       "entries sum to 2a+6");
        family_require(alpha + delta != a + 3 || gamma + delta >= a + 3, family,
                       "alpha + delta != a+3 or gamma + delta >= a+3");
        family_require(alpha != a + 3, family, "alpha != a+3");
        return done({alpha, beta, gamma, delta}, seq({6}, 2, a), false, 2);
    }
    if (family == "prop-5.7") {
        int a = family_param(params, family, "a");
        int alpha = family_param(params, family, "alpha");
        int beta = family_param(params, family, "beta");
        int gamma = family_param(params, family, "gamma");
        int delta = family_param(params, family, "delta");
        family_require(a >= 0, family, "a >= 0");
        family_require(alpha >= beta && beta >= gamma && gamma >= delta && delta >= 1,
                       family, "alpha >= beta >= gamma >= delta >= 1");
        family_require(alpha + beta + gamma + delta == 2 * a + 8, family,
                       "entries sum to 2a+8");
        family_require(alpha > a + 2 || delta == 1 || alpha + delta != a + 4,
                       family, "alpha > a+2 or delta = 1 or alpha + delta != a+4");
        family_require(alpha != a + 4, family, "alpha != a+4");
        family_require(alpha != a + 3 || gamma != 1, family,
                       "alpha != a+3 or gamma != 1");
        return done({alpha, beta, gamma, delta}, seq({4, 4}, 2, a), false, 2);
    }
    if (family == "prop-5.8") {
        int a = family_param(params, family, "a");
        family_require(a >= 0, family, "a >= 0");
        return done({a + 3, a + 3, 1, 1}, seq({5, 3}, 2, a), false, 2);
    }
    if (family == "prop-5.9") {
        // Stated for a >= 1; a = 0 is admitted as well since the printed
        // instance list starts with the a = 0 pair (2,2,2; 4,2).
        int a = family_param(params, family, "a");
        int alpha = family_param(params, family, "alpha");
        int beta = family_param(params, family, "beta");
        int gamma = family_param(params, family, "gamma");
        family_require(a >= 0, family, "a >= 0");
        family_require(alpha >= beta && beta >= gamma && gamma >= 2, family,
                       "alpha >= beta >= gamma >= 2");
        family_require(alpha % 2 == 0 && beta % 2 == 0 && gamma % 2 == 0, family,
                       "entries even");
        family_require(alpha + beta + gamma == 2 * a + 6, family,
                       "entries sum to 2a+6");
        return done({alpha, beta, gamma}, seq({a + 4, 2}, 1, a), false, 2);
    }
    if (family == "thm-6.1") {
        int a = family_param(params, family, "a");
        int b = family_param(params, family, "b");
        family_require(a >= 3, family, "a >= 3");
        family_require(b >= 1, family, "b >= 1");
        return done(std::vector<int>(2 * b, a),
                    seq({2 * b + 1, 2 * b + 1}, 2, a * b - 2 * b - 1), false, 1);
    }
    if (family == "sporadic") {
        int index = family_param(params, family, "index");
        family_require(index == 1 || index == 2, family, "index in {1, 2}");
        if (index == 1) return done({3, 3, 3, 3}, {7, 4, 1}, false, 1);
        return done({3, 3, 3, 3}, {5, 4, 3}, false, 1);
    }
    throw std::invalid_argument("unknown family: " + family);
}

// ---- witnesses for the realizable families -------------------------------

struct FamilyWitness {
    Multigraph h;              // realizes t
    EulerianPartition part;    // locally connected Eulerian d-partition
};

namespace detail {

// Per-edge color pairs; copy 2e gets the smaller color.
struct WitnessBuilder {
    Multigraph h;
    std::vector<std::pair<int, int>> colors;

    int add_edge(int u, int v, int c1, int c2) {
        h.add_edge(u, v);
        colors.emplace_back(std::min(c1, c2), std::max(c1, c2));
        return h.edge_count() - 1;
    }

    /// u-v path through `count` fresh internal vertices, every edge with the
    /// same color pair.
    void add_path(int u, int v, int count, int c1, int c2) {
        int prev = u;
        for (int i = 0; i < count; ++i) {
            h.vertex_count += 1;
            int w = h.vertex_count - 1;
            add_edge(prev, w, c1, c2);
            prev = w;
        }
        add_edge(prev, v, c1, c2);
    }

    FamilyWitness finish(int color_count) {
        std::vector<int> flat;
        flat.reserve(2 * colors.size());
        for (auto [c1, c2] : colors) {
            flat.push_back(c1);
            flat.push_back(c2);
        }
        EulerianPartition part(double_graph(h), std::move(flat), color_count);
        return FamilyWitness{std::move(h), std::move(part)};
    }
};

}  // namespace detail

inline FamilyWitness build_witness(const FamilyInstance& inst) {
    using detail::family_param;
    if (!inst.realizable)
        throw std::invalid_argument(inst.family + ": no constructive witness");
    detail::WitnessBuilder b;
    b.h.vertex_count = 2;  // u = 0, v = 1 in every construction

    if (inst.family == "prop-4.1") {
        int n = family_param(inst.params, inst.family, "n");
        b.add_edge(0, 0, 1, 1);           // loop at u
        b.add_path(0, 1, n - 4, 0, 1);    // edge a subdivided n-4 times
        b.add_edge(0, 1, 0, 0);           // b
        b.add_edge(0, 1, 0, 1);           // c
        return b.finish(2);
    }
    if (inst.family == "prop-4.2") {
        int n = family_param(inst.params, inst.family, "n");
        if (n == 3) {
            b.add_edge(0, 0, 0, 0);  // first loop at u
            b.add_edge(0, 0, 0, 1);  // second loop at u
            b.add_edge(1, 1, 2, 3);  // loop at v
            b.add_edge(0, 1, 1, 3);  // a
            b.add_edge(0, 1, 1, 2);  // b
            b.add_edge(0, 1, 2, 3);  // c
            return b.finish(4);
        }
        b.add_edge(0, 0, 3, 3);           // loop at u
        b.add_path(0, 1, n - 2, 0, 1);    // a
        b.add_path(0, 1, n - 4, 2, 3);    // b
        b.add_edge(0, 1, 0, 2);           // c
        b.add_edge(0, 1, 1, 2);           // d
        b.add_edge(0, 1, 2, 3);           // e
        return b.finish(4);
    }
    if (inst.family == "prop-4.3") {
        int n = family_param(inst.params, inst.family, "n");
        int k = family_param(inst.params, inst.family, "k");
        int a = family_param(inst.params, inst.family, "a");
        if (k == 1) {
            b.add_edge(0, 0, 0, 0);  // loop e_1
            for (int j = 2; j <= a - 2; ++j) b.add_edge(0, 1, 0, 1);
            b.add_edge(0, 1, 1, 1);         // e_{a-1}
            b.add_path(0, 1, n - a, 0, 1);  // P_1
            return b.finish(2);
        }
        b.add_edge(0, 0, 0, 0);  // e_1
        b.add_edge(0, 1, 1, 1);  // e_2
        for (int j = 3; j <= a - 1; ++j) b.add_edge(0, 1, 0, 1);
        for (int i = 2; i <= k; ++i)  // block i: classes E_{2i-1}, E_{2i}
            for (int j = (i - 1) * (a - 1) + 1; j <= i * (a - 1); ++j)
                b.add_edge(0, 1, 2 * i - 2, 2 * i - 1);
        b.add_path(0, 1, n - a, 0, 2 * k - 1);  // P_1: E_1 and E_{2k}
        for (int i = 2; i <= k; ++i)            // P_i: E_{2(i-1)} and E_{2i-1}
            b.add_path(0, 1, n - a, 2 * i - 3, 2 * i - 2);
        return b.finish(2 * k);
    }
    throw std::invalid_argument(inst.family + ": no constructive witness");
}

// ---- exhaustive confirmation of the non-realizable families --------------

struct NonrealizableCertificate {
    bool confirmed = false;               // true: exhaustive search found nothing
    std::optional<Plan> contradiction;    // a witness plan, if one was found
    long long realizations_tried = 0;
};

inline NonrealizableCertificate verify_nonrealizable(const FamilyInstance& inst,
                                                     int ell_budget) {
    if (inst.realizable)
        throw std::invalid_argument(inst.family + ": instance is realizable");
    if (inst.pair.ell() > ell_budget)
        throw budget_exceeded(inst.family + ": instance has " +
                              std::to_string(inst.pair.ell()) +
                              " edges, over the budget of " +
                              std::to_string(ell_budget));
    RealizeVerdict v = is_realizable(inst.pair);
    NonrealizableCertificate cert;
    cert.realizations_tried = v.realizations_tried;
    cert.confirmed = !v.realizable;
    if (v.realizable) cert.contradiction = v.plan;
    return cert;
}

// ---- instance generation up to an edge budget ----------------------------

namespace detail {

template <typename Fn>
void for_each_sorted_tuple(int count, int total, int lo, int hi, Fn&& fn,
                           std::vector<int>& cur) {
    if (count == 0) {
        if (total == 0) fn(cur);
        return;
    }
    int cap = std::min(hi, total - lo * (count - 1));
    for (int x = cap; x >= lo; --x) {
        cur.push_back(x);
        for_each_sorted_tuple(count - 1, total - x, lo, x, fn, cur);
        cur.pop_back();
    }
}

// Non-increasing tuples of `count` values in [lo, hi] summing to total.
template <typename Fn>
void for_each_sorted_tuple(int count, int total, int lo, int hi, Fn&& fn) {
    std::vector<int> cur;
    for_each_sorted_tuple(count, total, lo, hi, fn, cur);
}

}  // namespace detail

inline std::vector<FamilyInstance> table_rows(const std::string& family,
                                              int max_ell) {
    std::vector<FamilyInstance> rows;
    auto push = [&](std::map<std::string, int> params, std::vector<int> t = {}) {
        try {
            FamilyInstance inst = make_instance(family, std::move(params), std::move(t));
            if (inst.pair.ell() <= max_ell) rows.push_back(std::move(inst));
        } catch (const std::invalid_argument&) {
            // parameter combination outside the family; skip
        }
    };

    if (family == "prop-4.1") {
        for (int n = 4; n <= max_ell; ++n) push({{"n", n}});
    } else if (family == "prop-4.2") {
        for (int n = 3; 2 * n <= max_ell; ++n) push({{"n", n}});
    } else if (family == "prop-4.3") {
        for (int a = 4; a <= max_ell; a += 2)
            for (int n = a; n <= max_ell; ++n)
                for (int k = 1; n * k <= max_ell; ++k)
                    push({{"n", n}, {"k", k}, {"a", a}});
    } else if (family == "prop-5.1") {
        for (int ell = 2; ell <= max_ell; ++ell)
            for (int b = 1; b < ell; ++b) push({{"a", 2 * ell - b}, {"b", b}});
    } else if (family == "prop-5.2") {
        for (int n = 2; n <= max_ell; ++n) push({{"n", n}});
    } else if (family == "prop-5.3") {
        for (int a = 2; a <= max_ell - 2; ++a)
            for (int b = 2; a + b <= max_ell; ++b)
                detail::for_each_sorted_tuple(
                    a, 2 * (a + b), 2, 2 * (a + b),
                    [&](const std::vector<int>& t) {
                        bool even = true;
                        for (int x : t) even = even && x % 2 == 0;
                        if (even) push({{"a", a}, {"b", b}}, t);
                    });
    } else if (family == "prop-5.4") {
        for (int a = 0; a + 3 <= max_ell; ++a)
            for (int b = 0; b <= a + 2; ++b) push({{"a", a}, {"b", b}});
    } else if (family == "prop-5.5") {
        for (int a = 1; a + 2 <= max_ell; ++a)
            for (int alpha = 1; alpha <= 2 * a + 2; ++alpha)
                for (int beta = 1; beta <= alpha; ++beta)
                    push({{"a", a}, {"alpha", alpha}, {"beta", beta}});
    } else if (family == "prop-5.6") {
        for (int a = 1; a + 3 <= max_ell; ++a)
            detail::for_each_sorted_tuple(4, 2 * a + 6, 1, 2 * a + 3,
                                          [&](const std::vector<int>& x) {
                                              push({{"a", a},
                                                    {"alpha", x[0]},
                                                    {"beta", x[1]},
                                                    {"gamma", x[2]},
                                                    {"delta", x[3]}});
                                          });
    } else if (family == "prop-5.7") {
        for (int a = 0; a + 4 <= max_ell; ++a)
            detail::for_each_sorted_tuple(4, 2 * a + 8, 1, 2 * a + 5,
                                          [&](const std::vector<int>& x) {
                                              push({{"a", a},
                                                    {"alpha", x[0]},
                                                    {"beta", x[1]},
                                                    {"gamma", x[2]},
                                                    {"delta", x[3]}});
                                          });
    } else if (family == "prop-5.8") {
        for (int a = 0; a + 4 <= max_ell; ++a) push({{"a", a}});
    } else if (family == "prop-5.9") {
        for (int a = 0; a + 3 <= max_ell; ++a)
            detail::for_each_sorted_tuple(3, 2 * a + 6, 2, 2 * a + 2,
                                          [&](const std::vector<int>& x) {
                                              push({{"a", a},
                                                    {"alpha", x[0]},
                                                    {"beta", x[1]},
                                                    {"gamma", x[2]}});
                                          });
    } else if (family == "thm-6.1") {
        for (int a = 3; a <= max_ell; ++a)
            for (int b = 1; a * b <= max_ell; ++b) push({{"a", a}, {"b", b}});
    } else if (family == "sporadic") {
        push({{"index", 1}});
        push({{"index", 2}});
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }

    std::sort(rows.begin(), rows.end(),
              [](const FamilyInstance& x, const FamilyInstance& y) {
                  return std::tuple(x.pair.ell(), x.pair.d.entries, x.pair.t.entries) <
                         std::tuple(y.pair.ell(), y.pair.d.entries, y.pair.t.entries);
              });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const FamilyInstance& x, const FamilyInstance& y) {
                               return x.pair == y.pair;
                           }),
               rows.end());
    return rows;
}

}  // namespace geoplan
