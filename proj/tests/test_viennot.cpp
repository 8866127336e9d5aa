// Shadow lines, their iteration, Erdős–Szekeres labels, and the labeled
// characterization of maximal avoiders.

#include <random>

#include "catch_amalgamated.hpp"
#include "rdl/viennot.hpp"

using namespace rdl;

namespace {

Permutation P(const std::string& text) { return parse_permutation(text); }

std::vector<Permutation> all_perms(int n) {
    std::vector<int> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(std::vector<int>(d));
    } while (std::next_permutation(d.begin(), d.end()));
    return out;
}

}  // namespace

TEST_CASE("shadow lines of 452316", "[viennot]") {
    ShadowDiagram d = shadow_lines(P("452316"));
    REQUIRE(d.iterations.size() == 3);

    const auto& first = d.iterations[0];
    REQUIRE(first.size() == 3);
    CHECK(first[0] == ShadowLine{{1, 4}, {3, 2}, {5, 1}});
    CHECK(first[1] == ShadowLine{{2, 5}, {4, 3}});
    CHECK(first[2] == ShadowLine{{6, 6}});

    // Rightmost y-coordinates per line, per iteration.
    auto rows = first_rows_via_shadows(P("452316"));
    CHECK(rows == std::vector<std::vector<int>>{{1, 3, 6}, {2, 5}, {4}});
}

TEST_CASE("shadow line structural invariants", "[viennot]") {
    std::mt19937 rng(452316);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<int> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = i + 1;
        std::shuffle(d.begin(), d.end(), rng);
        Permutation p{std::vector<int>(d)};
        ShadowDiagram diagram = shadow_lines(p);
        REQUIRE_FALSE(diagram.iterations.empty());
        // Within a line, x strictly increases and y strictly decreases.
        for (const auto& iter : diagram.iterations)
            for (const auto& line : iter)
                for (size_t i = 1; i < line.size(); ++i) {
                    CHECK(line[i - 1].x < line[i].x);
                    CHECK(line[i - 1].y > line[i].y);
                }
        // Iteration 1 points are exactly the permutation graph.
        size_t total = 0;
        for (const auto& line : diagram.iterations[0]) {
            for (const auto& pt : line) CHECK(p[pt.x - 1] == pt.y);
            total += line.size();
        }
        CHECK(total == static_cast<size_t>(n));
    }
}

TEST_CASE("decreasing permutation yields one line per iteration", "[viennot]") {
    ShadowDiagram d = shadow_lines(Permutation::decreasing(5));
    REQUIRE(d.iterations.size() == 5);
    CHECK(d.iterations[0].size() == 1);
    CHECK(d.iterations[0][0].size() == 5);
    CHECK(first_rows_via_shadows(Permutation::decreasing(5)) ==
          std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {5}});
}

TEST_CASE("first rows via shadows", "[viennot]") {
    CHECK(first_rows_via_shadows(Permutation::identity(4)) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(first_rows_via_shadows(P("21")) == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("shadow iteration recovers insertion tableau rows", "[viennot]") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : all_perms(n)) {
            auto [Pt, Qt] = rsk(p);
            (void)Qt;
            CHECK(first_rows_via_shadows(p) == Pt.rows());
        }
}

TEST_CASE("Erdős–Szekeres labels", "[viennot]") {
    CHECK(es_labels(P("321")).labels ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}});
    CHECK(es_labels(P("12")).labels == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
    CHECK(es_labels(P("452316")).labels ==
          std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 1}});
}

TEST_CASE("label pairs are pairwise distinct", "[viennot]") {
    std::mt19937 rng(1928);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::vector<int> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = i + 1;
        std::shuffle(d.begin(), d.end(), rng);
        auto labels = es_labels(Permutation{std::vector<int>(d)}).labels;
        std::set<std::pair<int, int>> unique(labels.begin(), labels.end());
        CHECK(unique.size() == labels.size());
    }
}

TEST_CASE("shadow conditions for maximal avoiders", "[viennot]") {
    CHECK(check_avoider_shadow_conditions(P("213"), 3));
    CHECK_FALSE(check_avoider_shadow_conditions(P("123"), 3));
    CHECK_FALSE(check_avoider_shadow_conditions(P("246513"), 4));
    CHECK_THROWS_AS(check_avoider_shadow_conditions(P("12"), 3), std::invalid_argument);
}

TEST_CASE("shadow conditions match avoidance exhaustively at k=3", "[viennot]") {
    for (const auto& p : all_perms(3)) {
        bool avoids = !contains(ReverseDoubleList(p).word(), Permutation::identity(3));
        CHECK(check_avoider_shadow_conditions(p, 3) == avoids);
    }
}

TEST_CASE("diagram text rendering", "[viennot]") {
    CHECK(to_string(shadow_lines(P("452316"))) ==
          "iteration 1: (1,4) (3,2) (5,1) | (2,5) (4,3) | (6,6)\n"
          "iteration 2: (3,4) (5,2) | (4,5)\n"
          "iteration 3: (5,4)");
}

TEST_CASE("svg rendering smoke", "[viennot]") {
    std::string svg = to_svg(P("452316"));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("iteration-1") != std::string::npos);
    CHECK(svg.find("iteration-3") != std::string::npos);
    // One circle per point across all iterations: 6 + 3 + 1.
    size_t circles = 0;
    for (size_t pos = svg.find("<circle"); pos != std::string::npos;
         pos = svg.find("<circle", pos + 1))
        ++circles;
    CHECK(circles == 10);
}
