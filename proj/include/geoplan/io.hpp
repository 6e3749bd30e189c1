#pragma once

// Text formats: multigraphs, bimatrices, degree sequences with power
// shorthand, half-edge partitions, and polygon words.

#include <sstream>

#include "geoplan/errors.hpp"
#include "geoplan/mapbuild.hpp"

namespace geoplan {

namespace detail {

inline std::vector<std::string> nonblank_lines(const std::string& text,
                                               std::vector<int>* numbers = nullptr) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(begin, end - begin + 1));
        if (numbers) numbers->push_back(no);
    }
    return out;
}

}  // namespace detail

// ---- multigraph: first line "n ell", then ell lines "u v" ----------------

inline Multigraph parse_multigraph(const std::string& text) {
    std::vector<int> line_no;
    auto lines = detail::nonblank_lines(text, &line_no);
    if (lines.empty()) throw parse_error("multigraph: empty input");
    std::istringstream head(lines[0]);
    int n = 0, ell = 0;
    if (!(head >> n >> ell) || n < 0 || ell < 0)
        throw parse_error("multigraph: expected \"n ell\"", line_no[0]);
    if (static_cast<int>(lines.size()) != ell + 1)
        throw parse_error("multigraph: expected " + std::to_string(ell) +
                          " edge lines");
    Multigraph g;
    g.vertex_count = n;
    for (int e = 0; e < ell; ++e) {
        std::istringstream in(lines[e + 1]);
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw parse_error("multigraph: expected \"u v\"", line_no[e + 1]);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("multigraph: endpoint out of range", line_no[e + 1]);
        g.edges.emplace_back(u, v);
    }
    return g;
}

inline std::string format_multigraph(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

// ---- bimatrix: one line per edge, "digits|digits" ------------------------

inline Bimatrix parse_bimatrix(const std::string& text) {
    std::vector<int> line_no;
    auto lines = detail::nonblank_lines(text, &line_no);
    if (lines.empty()) throw parse_error("bimatrix: empty input");
    Bimatrix b;
    for (size_t i = 0; i < lines.size(); ++i) {
        auto sep = lines[i].find('|');
        if (sep == std::string::npos)
            throw parse_error("bimatrix: missing '|' separator", line_no[i]);
        auto digits = [&](const std::string& part) {
            std::vector<int> row;
            int sum = 0;
            for (char c : part) {
                if (c == ' ' || c == '\t') continue;
                if (c < '0' || c > '2')
                    throw parse_error("bimatrix: entries must be 0, 1 or 2",
                                      line_no[i]);
                row.push_back(c - '0');
                sum += c - '0';
            }
            if (sum != 2)
                throw parse_error("bimatrix: row " + std::to_string(i + 1) +
                                      " does not sum to 2",
                                  line_no[i]);
            return row;
        };
        b.g_rows.push_back(digits(lines[i].substr(0, sep)));
        b.h_rows.push_back(digits(lines[i].substr(sep + 1)));
        if (b.g_rows.back().size() != b.g_rows.front().size() ||
            b.h_rows.back().size() != b.h_rows.front().size())
            throw parse_error("bimatrix: ragged rows", line_no[i]);
    }
    return b;
}

inline std::string format_bimatrix(const Bimatrix& b) {
    std::ostringstream out;
    for (int e = 0; e < b.edge_count(); ++e) {
        for (int x : b.g_rows[e]) out << x;
        out << '|';
        for (int x : b.h_rows[e]) out << x;
        out << '\n';
    }
    return out.str();
}

// ---- degree sequences: "5,3,2^4" -----------------------------------------

inline DegreeSequence parse_degree_list(const std::string& text) {
    std::vector<int> entries;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto caret = item.find('^');
        try {
            int value = std::stoi(item.substr(0, caret));
            int count = 1;
            if (caret != std::string::npos)
                count = std::stoi(item.substr(caret + 1));
            if (count < 0) throw parse_error("degree list: negative power");
            for (int i = 0; i < count; ++i) entries.push_back(value);
        } catch (const std::logic_error&) {
            throw parse_error("degree list: bad item \"" + item + "\"");
        }
    }
    if (entries.empty()) throw parse_error("degree list: empty");
    try {
        return DegreeSequence(std::move(entries));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(std::string("degree list: ") + ex.what());
    }
}

inline std::string format_degree_list(const DegreeSequence& d) {
    std::ostringstream out;
    for (size_t i = 0; i < d.entries.size();) {
        size_t j = i;
        while (j < d.entries.size() && d.entries[j] == d.entries[i]) ++j;
        if (i) out << ',';
        out << d.entries[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

// ---- partitions: one line per edge, "edge: c1 c2" (colors 1-based) -------

inline EulerianPartition parse_partition(const std::string& text,
                                         const Multigraph& g) {
    std::vector<int> line_no;
    auto lines = detail::nonblank_lines(text, &line_no);
    if (static_cast<int>(lines.size()) != g.edge_count())
        throw parse_error("partition: expected one line per edge");
    std::vector<int> color(2 * g.edge_count(), -1);
    int max_color = 0;
    for (size_t i = 0; i < lines.size(); ++i) {
        std::string line = lines[i];
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("partition: missing ':'", line_no[i]);
        std::istringstream head(line.substr(0, colon));
        std::istringstream tail(line.substr(colon + 1));
        int e = 0, c1 = 0, c2 = 0;
        if (!(head >> e) || !(tail >> c1 >> c2))
            throw parse_error("partition: expected \"edge: c1 c2\"", line_no[i]);
        if (e < 0 || e >= g.edge_count() || color[2 * e] >= 0)
            throw parse_error("partition: bad or repeated edge index", line_no[i]);
        if (c1 < 1 || c2 < 1)
            throw parse_error("partition: colors are 1-based", line_no[i]);
        color[2 * e] = c1 - 1;
        color[2 * e + 1] = c2 - 1;
        max_color = std::max({max_color, c1, c2});
    }
    return EulerianPartition(double_graph(g), std::move(color), max_color);
}

inline std::string format_partition(const EulerianPartition& part) {
    std::ostringstream out;
    for (int e = 0; e < part.base.base.edge_count(); ++e)
        out << e << ": " << part.color[2 * e] + 1 << ' ' << part.color[2 * e + 1] + 1
            << '\n';
    return out.str();
}

// ---- words: one polygon per line, letters a..z or integers, bar as '~' ---

inline WordRepresentation parse_word(const std::string& text) {
    auto lines = detail::nonblank_lines(text);
    if (lines.empty()) throw parse_error("word: empty input");
    WordRepresentation w;
    for (const auto& line : lines) {
        std::istringstream in(line);
        std::string token;
        w.polygons.emplace_back();
        while (in >> token) {
            Letter letter;
            std::string body = token;
            if (!body.empty() && body[0] == '~') {
                letter.bar = true;
                body = body.substr(1);
            }
            if (body.size() == 1 && body[0] >= 'a' && body[0] <= 'z') {
                letter.edge = body[0] - 'a';
            } else {
                try {
                    letter.edge = std::stoi(body);
                } catch (const std::logic_error&) {
                    throw parse_error("word: bad token \"" + token + "\"");
                }
                if (letter.edge < 0) throw parse_error("word: negative edge index");
            }
            w.polygons.back().push_back(letter);
        }
        if (w.polygons.back().empty()) throw parse_error("word: empty polygon");
    }
    return w;
}

inline std::string format_word(const WordRepresentation& w) {
    int max_edge = 0;
    for (const auto& poly : w.polygons)
        for (const Letter& letter : poly) max_edge = std::max(max_edge, letter.edge);
    bool alpha = max_edge < 26;
    std::ostringstream out;
    for (const auto& poly : w.polygons) {
        for (size_t i = 0; i < poly.size(); ++i) {
            if (i) out << ' ';
            if (poly[i].bar) out << '~';
            if (alpha)
                out << static_cast<char>('a' + poly[i].edge);
            else
                out << poly[i].edge;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace geoplan
