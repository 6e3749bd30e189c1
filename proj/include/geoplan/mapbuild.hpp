#pragma once

// Word representations of maps: polygons with signed sides, gluing to a
// surface (vertex classes, Euler characteristic, orientability), and the
// construction of candidate polygon systems for a geographic plan from
// Eulerian trails of its face graphs.

#include <set>

#include "geoplan/errors.hpp"
#include "geoplan/partition.hpp"

namespace geoplan {

// One polygon side: an edge index, possibly barred (side arrow runs against
// the polygon's boundary direction).
struct Letter {
    int edge = 0;
    bool bar = false;

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

struct WordRepresentation {
    std::vector<std::vector<Letter>> polygons;

    int side_count() const {
        int s = 0;
        for (const auto& poly : polygons) s += static_cast<int>(poly.size());
        return s;
    }
    int edge_count() const { return side_count() / 2; }
};

struct GluedSurface {
    int vertex_classes = 0;
    int chi = 0;
    bool orientable = false;
    SurfaceClass surface{true, 0};
    // corner_class[p][k]: vertex class of the corner at the start of side k
    // of polygon p.
    std::vector<std::vector<int>> corner_class;
};

namespace detail {

struct LetterUse {
    int poly;
    int pos;
    bool bar;
};

inline std::vector<std::array<LetterUse, 2>> letter_pairs(
    const WordRepresentation& w) {
    std::vector<std::array<LetterUse, 2>> pairs;
    std::vector<int> seen;  // letter -> count
    auto slot = [&](int e) -> std::array<LetterUse, 2>& {
        if (e < 0) throw parse_error("word: negative edge index");
        if (e >= static_cast<int>(pairs.size())) {
            pairs.resize(e + 1);
            seen.resize(e + 1, 0);
        }
        return pairs[e];
    };
    for (int p = 0; p < static_cast<int>(w.polygons.size()); ++p)
        for (int k = 0; k < static_cast<int>(w.polygons[p].size()); ++k) {
            const Letter& letter = w.polygons[p][k];
            auto& pair = slot(letter.edge);
            if (seen[letter.edge] >= 2)
                throw parse_error("word: letter " + std::to_string(letter.edge) +
                                  " occurs more than twice");
            pair[seen[letter.edge]++] = LetterUse{p, k, letter.bar};
        }
    for (int e = 0; e < static_cast<int>(pairs.size()); ++e)
        if (seen[e] != 2)
            throw parse_error("word: letter " + std::to_string(e) +
                              " does not occur exactly twice");
    return pairs;
}

// Union-find where each node carries a parity relative to its root.
struct ParityDisjointSet {
    std::vector<int> parent;
    std::vector<char> parity;  // to parent

    explicit ParityDisjointSet(int n) : parent(n), parity(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, char> find(int x) {
        char p = 0;
        while (parent[x] != x) {
            p ^= parity[x];
            x = parent[x];
        }
        return {x, p};
    }
    /// Enforce parity(a) xor parity(b) = rel; false on contradiction.
    bool relate(int a, int b, char rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return static_cast<char>(pa ^ pb) == rel;
        parent[rb] = ra;
        parity[rb] = static_cast<char>(pa ^ pb ^ rel);
        return true;
    }
};

}  // namespace detail

/// Glue the paired sides. Corners between consecutive sides are identified
/// head-with-head and tail-with-tail along each glued pair; the vertex
/// classes are the resulting corner components.
inline GluedSurface glue(const WordRepresentation& w) {
    if (w.polygons.empty()) throw parse_error("word: no polygons");
    for (const auto& poly : w.polygons)
        if (poly.empty()) throw parse_error("word: empty polygon");
    auto pairs = detail::letter_pairs(w);
    int ell = static_cast<int>(pairs.size());
    int polys = static_cast<int>(w.polygons.size());

    // Minimality: the polygons must be linked into one piece by the letters.
    {
        DisjointSet ds(polys);
        for (const auto& pair : pairs) ds.unite(pair[0].poly, pair[1].poly);
        if (ds.component_count() != 1)
            throw parse_error("word: the polygons glue to two or more surfaces");
    }

    std::vector<int> offset(polys, 0);
    for (int p = 1; p < polys; ++p)
        offset[p] = offset[p - 1] + static_cast<int>(w.polygons[p - 1].size());
    int corners = w.side_count();
    auto corner = [&](int p, int k) {
        int len = static_cast<int>(w.polygons[p].size());
        return offset[p] + ((k % len) + len) % len;
    };

    DisjointSet classes(corners);
    for (const auto& pair : pairs) {
        // Tail/head corners of each occurrence per its bar.
        auto ends = [&](const detail::LetterUse& use) {
            int tail = corner(use.poly, use.pos);
            int head = corner(use.poly, use.pos + 1);
            if (use.bar) std::swap(tail, head);
            return std::pair(tail, head);
        };
        auto [t0, h0] = ends(pair[0]);
        auto [t1, h1] = ends(pair[1]);
        classes.unite(t0, t1);
        classes.unite(h0, h1);
    }

    GluedSurface out;
    out.vertex_classes = classes.component_count();
    out.chi = out.vertex_classes - ell + polys;

    // Orientability: look for a polygon-flip assignment under which every
    // letter occurs once plain and once barred.
    detail::ParityDisjointSet flips(polys);
    out.orientable = true;
    for (const auto& pair : pairs) {
        if (pair[0].poly == pair[1].poly) {
            if (pair[0].bar == pair[1].bar) out.orientable = false;
        } else if (!flips.relate(pair[0].poly, pair[1].poly,
                                 pair[0].bar == pair[1].bar ? 1 : 0)) {
            out.orientable = false;
        }
        if (!out.orientable) break;
    }

    out.surface = out.orientable ? SurfaceClass{true, (2 - out.chi) / 2}
                                 : SurfaceClass{false, 2 - out.chi};

    out.corner_class.resize(polys);
    std::vector<int> dense(corners, -1);
    int next = 0;
    for (int p = 0; p < polys; ++p)
        for (int k = 0; k < static_cast<int>(w.polygons[p].size()); ++k) {
            int root = classes.find(corner(p, k));
            if (dense[root] < 0) dense[root] = next++;
            out.corner_class[p].push_back(dense[root]);
        }
    return out;
}

/// The standard one-polygon word of each surface: (a abar) for the sphere,
/// (a1 b1 a1bar b1bar ...) for S_p, (c1 c1 c2 c2 ...) for C_q.
inline WordRepresentation normal_form(const SurfaceClass& s) {
    WordRepresentation w;
    w.polygons.emplace_back();
    auto& poly = w.polygons.back();
    if (s.orientable) {
        if (s.genus == 0) {
            poly = {{0, false}, {0, true}};
            return w;
        }
        for (int i = 0; i < s.genus; ++i) {
            poly.push_back({2 * i, false});
            poly.push_back({2 * i + 1, false});
            poly.push_back({2 * i, true});
            poly.push_back({2 * i + 1, true});
        }
        return w;
    }
    if (s.genus < 1)
        throw std::invalid_argument("normal_form: no such non-orientable surface");
    for (int i = 0; i < s.genus; ++i) {
        poly.push_back({i, false});
        poly.push_back({i, false});
    }
    return w;
}

// A candidate polygon system for a plan: polygon f is an Eulerian trail of
// face graph G_f with a sign chosen for every side; corner k of polygon f
// carries the plan vertex the trail is passing through.
struct MapCandidate {
    WordRepresentation word;
    std::vector<std::vector<int>> corner_labels;
};

/// A candidate is valid when the glued vertex classes biject with the plan
/// vertices through the corner labels.
inline bool validate(const Plan& p, const MapCandidate& cand,
                     const GluedSurface& glued) {
    if (glued.vertex_classes != p.n()) return false;
    std::vector<int> label_of(glued.vertex_classes, -1);
    std::vector<char> label_used(p.n(), 0);
    for (int f = 0; f < static_cast<int>(cand.corner_labels.size()); ++f)
        for (int k = 0; k < static_cast<int>(cand.corner_labels[f].size()); ++k) {
            int cls = glued.corner_class[f][k];
            int label = cand.corner_labels[f][k];
            if (label_of[cls] < 0) {
                if (label_used[label]) return false;
                label_of[cls] = label;
                label_used[label] = 1;
            } else if (label_of[cls] != label) {
                return false;
            }
        }
    return true;
}

namespace detail {

// One Eulerian trail of a face graph, recorded as the side letters and the
// base vertex at the start corner of each side.
struct FaceTrail {
    std::vector<int> letters;
    std::vector<int> labels;
};

inline std::vector<FaceTrail> face_trails(const LocalGraph& gf) {
    const Multigraph& g = gf.graph;
    std::vector<std::vector<std::pair<int, int>>> incident(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        incident[u].emplace_back(e, v);
        if (u != v) incident[v].emplace_back(e, u);
    }
    std::vector<FaceTrail> out;
    std::vector<char> used(g.edge_count(), 0);
    FaceTrail cur;
    auto rec = [&](auto&& self, int at) -> void {
        if (static_cast<int>(cur.letters.size()) == g.edge_count()) {
            if (at == 0) out.push_back(cur);
            return;
        }
        for (auto [e, to] : incident[at]) {
            if (used[e]) continue;
            used[e] = 1;
            cur.letters.push_back(gf.edge_ids[e]);
            cur.labels.push_back(gf.vertex_ids[at]);
            self(self, to);
            cur.labels.pop_back();
            cur.letters.pop_back();
            used[e] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/// Every candidate polygon system: all Eulerian trails per face combined
/// with all per-side sign choices. fn returns false to stop; the function
/// throws when more than `budget` candidates would be visited.
template <typename Fn>
void for_each_candidate(const Plan& p, long long budget, Fn&& fn) {
    if (!is_geographic(p))
        throw std::invalid_argument("map building requires a geographic plan");
    int m = p.m();
    std::vector<std::vector<detail::FaceTrail>> trails(m);
    for (int f = 0; f < m; ++f) {
        trails[f] = detail::face_trails(face_graph(p, f));
        if (trails[f].empty())
            throw std::logic_error("no Eulerian trail in a face graph");
    }
    long long visited = 0;
    MapCandidate cand;
    cand.word.polygons.resize(m);
    cand.corner_labels.resize(m);
    bool stop = false;
    auto signs = [&](auto&& self, int f, int k) -> void {
        if (stop) return;
        if (f == m) {
            if (++visited > budget)
                throw budget_exceeded("map candidate budget of " +
                                      std::to_string(budget) + " exceeded");
            if (!fn(cand)) stop = true;
            return;
        }
        if (k == static_cast<int>(cand.word.polygons[f].size())) {
            self(self, f + 1, 0);
            return;
        }
        cand.word.polygons[f][k].bar = false;
        self(self, f, k + 1);
        cand.word.polygons[f][k].bar = true;
        self(self, f, k + 1);
        cand.word.polygons[f][k].bar = false;
    };
    auto pick = [&](auto&& self, int f) -> void {
        if (stop) return;
        if (f == m) {
            signs(signs, 0, 0);
            return;
        }
        for (const auto& trail : trails[f]) {
            cand.word.polygons[f].clear();
            for (int e : trail.letters) cand.word.polygons[f].push_back({e, false});
            cand.corner_labels[f] = trail.labels;
            self(self, f + 1);
            if (stop) return;
        }
    };
    pick(pick, 0);
}

// ---- deduplication modulo map-preserving transformations -----------------

namespace detail {

// Tokens of one polygon under a given rotation/reflection, bars resolved
// greedily: the first overall occurrence of each letter is made plain by
// flipping the letter globally, which is lexicographically minimal.
inline std::vector<int> canonical_word_key(const WordRepresentation& w) {
    int polys = static_cast<int>(w.polygons.size());
    std::vector<int> config(polys, 0);  // rotation * 2 + reflected
    std::vector<int> best;
    auto emit = [&] {
        std::vector<int> tokens;
        std::vector<int> flip;  // -1 unknown, else 0/1 per letter
        for (int p = 0; p < polys; ++p) {
            const auto& poly = w.polygons[p];
            int len = static_cast<int>(poly.size());
            int rot = config[p] / 2;
            bool refl = config[p] % 2;
            tokens.push_back(-1);  // polygon separator
            for (int i = 0; i < len; ++i) {
                // Reflection reverses the side order and bars every side.
                int idx = refl ? (rot - i % len + 2 * len) % len : (rot + i) % len;
                Letter letter = poly[idx];
                if (refl) letter.bar = !letter.bar;
                if (letter.edge >= static_cast<int>(flip.size()))
                    flip.resize(letter.edge + 1, -1);
                if (flip[letter.edge] < 0) flip[letter.edge] = letter.bar ? 1 : 0;
                bool bar = letter.bar ^ (flip[letter.edge] == 1);
                tokens.push_back(2 * letter.edge + (bar ? 1 : 0));
            }
        }
        if (best.empty() || tokens < best) best = std::move(tokens);
    };
    auto rec = [&](auto&& self, int p) -> void {
        if (p == polys) {
            emit();
            return;
        }
        int len = static_cast<int>(w.polygons[p].size());
        for (int c = 0; c < 2 * len; ++c) {
            config[p] = c;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace detail

/// All candidates, one representative per class modulo cyclic shifts, edge
/// reorientations, and polygon reorientations, in generation order.
inline std::vector<MapCandidate> word_candidates(const Plan& p,
                                                 long long budget = 1000000) {
    std::vector<MapCandidate> reps;
    std::set<std::vector<int>> keys;
    for_each_candidate(p, budget, [&](const MapCandidate& cand) {
        if (keys.insert(detail::canonical_word_key(cand.word)).second)
            reps.push_back(cand);
        return true;
    });
    return reps;
}

/// First valid candidate in generation order. A geographic plan always has
/// one; running out of candidates is an internal inconsistency.
inline std::pair<MapCandidate, GluedSurface> find_valid_map(
    const Plan& p, long long budget = 1000000) {
    std::optional<std::pair<MapCandidate, GluedSurface>> found;
    for_each_candidate(p, budget, [&](const MapCandidate& cand) {
        GluedSurface s = glue(cand.word);
        if (!validate(p, cand, s)) return true;
        found.emplace(cand, std::move(s));
        return false;
    });
    if (!found)
        throw std::logic_error(
            "internal inconsistency: geographic plan admits no valid map");
    return std::move(*found);
}

/// Surfaces over all valid candidates (exhaustive scan).
inline std::vector<SurfaceClass> surfaces_of(const Plan& p,
                                             long long budget = 1000000) {
    std::set<SurfaceClass> out;
    for_each_candidate(p, budget, [&](const MapCandidate& cand) {
        GluedSurface s = glue(cand.word);
        if (validate(p, cand, s)) out.insert(s.surface);
        return true;
    });
    if (out.empty())
        throw std::logic_error(
            "internal inconsistency: geographic plan admits no valid map");
    return {out.begin(), out.end()};
}

}  // namespace geoplan
