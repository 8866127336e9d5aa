#pragma once

// Viennot's geometric construction: shadow lines of a permutation graph,
// their iteration (which recovers the rows of the insertion tableau), the
// Erdős–Szekeres labels, and the shadow-line characterization of maximal
// monotone avoiders.

#include "rdl/core.hpp"
#include "rdl/tableaux.hpp"

namespace rdl {

struct ShadowPoint {
    int x = 0;  // 1-based position
    int y = 0;  // value
    bool operator==(const ShadowPoint&) const = default;
};

// One shadow line: x strictly increases, y strictly decreases.
using ShadowLine = std::vector<ShadowPoint>;

// iterations[j] holds the shadow lines of the j-th iterate (iteration 0 is
// built on the permutation's own graph, later ones on the marked corners).
struct ShadowDiagram {
    std::vector<std::vector<ShadowLine>> iterations;
};

namespace detail {

// Sweep left to right: a point joins the first line whose current minimum
// y exceeds its value, else starts a new line.  Each joining event leaves a
// corner at (x of the joining point, previous minimum y on that line);
// those corners are the point set for the next iteration.
inline std::vector<ShadowLine> shadow_lines_once(const std::vector<ShadowPoint>& points,
                                                 std::vector<ShadowPoint>& corners) {
    std::vector<ShadowLine> lines;
    for (const auto& pt : points) {
        bool joined = false;
        for (auto& line : lines) {
            if (line.back().y > pt.y) {
                corners.push_back({pt.x, line.back().y});
                line.push_back(pt);
                joined = true;
                break;
            }
        }
        if (!joined) lines.push_back({pt});
    }
    return lines;
}

}  // namespace detail

inline ShadowDiagram shadow_lines(const Permutation& p) {
    ShadowDiagram d;
    std::vector<ShadowPoint> points;
    for (int i = 0; i < p.size(); ++i) points.push_back({i + 1, p[i]});
    while (!points.empty()) {
        std::vector<ShadowPoint> corners;
        d.iterations.push_back(detail::shadow_lines_once(points, corners));
        points = std::move(corners);  // already in increasing-x order
    }
    return d;
}

// Erdős–Szekeres labels: (a_i, b_i) = lengths of the longest increasing /
// decreasing subsequences ending at position i.  Pairs are pairwise distinct.
struct ESLabeling {
    std::vector<std::pair<int, int>> labels;
};

inline ESLabeling es_labels(const Permutation& p) {
    const int n = p.size();
    ESLabeling out;
    out.labels.assign(static_cast<size_t>(n), {1, 1});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            auto& [ai, bi] = out.labels[static_cast<size_t>(i)];
            const auto& [aj, bj] = out.labels[static_cast<size_t>(j)];
            if (p[j] < p[i]) ai = std::max(ai, aj + 1);
            if (p[j] > p[i]) bi = std::max(bi, bj + 1);
        }
    }
    return out;
}

// Maximal-avoider characterization: for |p| = C(k,2), p p^r avoids 12...k iff
// (1) first-iteration shadow line i has exactly k-i points, and
// (2) the j-th point of line i carries label (i, j).
inline bool check_avoider_shadow_conditions(const Permutation& p, int k) {
    if (k < 1 || p.size() != k * (k - 1) / 2)
        throw std::invalid_argument("check_avoider_shadow_conditions: |p| must be C(k,2)");
    auto diagram = shadow_lines(p);
    const auto& lines = diagram.iterations.empty() ? std::vector<ShadowLine>{}
                                                   : diagram.iterations.front();
    if (static_cast<int>(lines.size()) != std::max(k - 1, 0)) return false;
    auto labels = es_labels(p);
    for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
        if (static_cast<int>(lines[static_cast<size_t>(i)].size()) != k - 1 - i) return false;
        for (int j = 0; j < static_cast<int>(lines[static_cast<size_t>(i)].size()); ++j) {
            const auto& pt = lines[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (labels.labels[static_cast<size_t>(pt.x - 1)] != std::make_pair(i + 1, j + 1))
                return false;
        }
    }
    return true;
}

// Rightmost y per line, one list per iteration; equals the rows of P(p).
inline std::vector<std::vector<int>> first_rows_via_shadows(const Permutation& p) {
    std::vector<std::vector<int>> rows;
    for (const auto& iter : shadow_lines(p).iterations) {
        std::vector<int> row;
        for (const auto& line : iter) row.push_back(line.back().y);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Text listing: "iteration 1: (1,4)(3,2)(5,1) | (2,5)(4,3) | (6,6)" style.
inline std::string to_string(const ShadowDiagram& d) {
    std::ostringstream out;
    for (size_t it = 0; it < d.iterations.size(); ++it) {
        if (it) out << '\n';
        out << "iteration " << it + 1 << ":";
        for (size_t l = 0; l < d.iterations[it].size(); ++l) {
            out << (l ? " |" : "");
            for (const auto& pt : d.iterations[it][l])
                out << " (" << pt.x << "," << pt.y << ")";
        }
    }
    return out.str();
}

// SVG rendering of the diagram: grid, points, and orthogonal shadow
// polylines, one group per iteration.  Display convenience only.
inline std::string to_svg(const Permutation& p) {
    const int n = p.size();
    const int cell = 40, margin = 50;
    const int w = margin * 2 + cell * (n + 1);
    const int h = margin * 2 + cell * (n + 1);
    auto X = [&](double x) { return margin + x * cell; };
    auto Y = [&](double y) { return h - margin - y * cell; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    out << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (int i = 0; i <= n + 1; ++i) {
        out << "    <line x1=\"" << X(i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(i)
            << "\" y2=\"" << Y(n + 1) << "\"/>\n";
        out << "    <line x1=\"" << X(0) << "\" y1=\"" << Y(i) << "\" x2=\"" << X(n + 1)
            << "\" y2=\"" << Y(i) << "\"/>\n";
    }
    out << "  </g>\n";
    static const char* palette[] = {"#000000", "#b22222", "#1e6eb5", "#2e8b57", "#946eb5"};
    auto diagram = shadow_lines(p);
    for (size_t it = 0; it < diagram.iterations.size(); ++it) {
        const char* color = palette[it % 5];
        out << "  <g id=\"iteration-" << it + 1 << "\" stroke=\"" << color << "\" fill=\""
            << color << "\" stroke-width=\"3\">\n";
        for (const auto& line : diagram.iterations[it]) {
            // Vertical drop from the top, elbows between points, tail to the right.
            out << "    <polyline fill=\"none\" points=\"";
            out << X(line.front().x) << "," << Y(n + 1) << " ";
            for (size_t i = 0; i < line.size(); ++i) {
                out << X(line[i].x) << "," << Y(line[i].y) << " ";
                if (i + 1 < line.size()) out << X(line[i + 1].x) << "," << Y(line[i].y) << " ";
            }
            out << X(n + 1) << "," << Y(line.back().y) << "\"/>\n";
            for (const auto& pt : line)
                out << "    <circle cx=\"" << X(pt.x) << "\" cy=\"" << Y(pt.y)
                    << "\" r=\"6\"/>\n";
        }
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace rdl
