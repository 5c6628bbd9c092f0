#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "socgrav/metrics.hpp"

using namespace socgrav;

namespace {

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("count_crossings basic drawings") {
    Graph x = parse_edge_list("a b\nc d");
    CHECK(count_crossings(x, std::vector<Vec2>{{0, 0}, {1, 1}, {0, 1}, {1, 0}}) == 1);
    CHECK(count_crossings(x, std::vector<Vec2>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) == 0);

    Graph path = parse_edge_list("a b\nb c\nc d\nd e");
    CHECK(count_crossings(path, std::vector<Vec2>{{0, 3}, {1, -2}, {2, 5}, {3, 0}, {4, 4}}) == 0);

    // K4 as triangle plus its centroid.
    std::vector<Vec2> k4{{0, 0}, {6, 0}, {3, 6}, {3, 2}};
    CHECK(count_crossings(complete(4), k4) == 0);
    std::vector<oracle::IPoint> ik4{{0, 0}, {6, 0}, {3, 6}, {3, 2}};
    CHECK(oracle::crossings(complete(4), ik4) == 0);
    // K4 as a convex quadrilateral has exactly its two diagonals crossing.
    CHECK(count_crossings(complete(4), std::vector<Vec2>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}) == 1);
}

TEST_CASE("count_crossings degenerate contacts") {
    Graph x = parse_edge_list("a b\nc d");
    // Collinear overlap counts.
    CHECK(count_crossings(x, std::vector<Vec2>{{0, 0}, {2, 0}, {1, 0}, {3, 0}}) == 1);
    // Collinear but disjoint.
    CHECK(count_crossings(x, std::vector<Vec2>{{0, 0}, {1, 0}, {2, 0}, {3, 0}}) == 0);
    // An endpoint resting on the other edge's interior is not a crossing.
    CHECK(count_crossings(x, std::vector<Vec2>{{0, 0}, {2, 0}, {1, 0}, {1, 5}}) == 0);
}

TEST_CASE("count_crossings agrees with the parametric oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng() % 14;
        Graph g = oracle::random_graph(n, 0.3, rng);
        int grid = 2 + static_cast<int>(rng() % 6);  // small grids force degeneracies
        std::vector<oracle::IPoint> ip;
        std::vector<Vec2> fp;
        for (std::size_t i = 0; i < n; ++i) {
            oracle::IPoint p{static_cast<std::int64_t>(rng() % grid), static_cast<std::int64_t>(rng() % grid)};
            // Keep positions distinct.
            while (std::any_of(ip.begin(), ip.end(), [&](auto q) { return q.x == p.x && q.y == p.y; }))
                p = {static_cast<std::int64_t>(rng() % (grid + n)), static_cast<std::int64_t>(rng() % (grid + n))};
            ip.push_back(p);
            fp.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
        }
        CHECK(count_crossings(g, fp) == oracle::crossings(g, ip));
    }
}

TEST_CASE("count_crossings is invariant under rigid motion and scaling") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> coord(-100, 100);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 4 + rng() % 12;
        Graph g = oracle::random_graph(n, 0.35, rng);
        std::vector<Vec2> p(n);
        for (auto& q : p) q = {coord(rng), coord(rng)};
        double a = coord(rng), s = 0.5 + std::abs(coord(rng)) / 10;
        std::vector<Vec2> moved;
        for (auto q : p) moved.push_back(Vec2{std::cos(a) * q.x - std::sin(a) * q.y, std::sin(a) * q.x + std::cos(a) * q.y} * s + Vec2{7, -3});
        CHECK(count_crossings(g, moved) == count_crossings(g, p));
    }
}

TEST_CASE("min_angular_resolution") {
    Graph star = parse_edge_list("s a\ns b\ns c");
    auto polar = [](double deg) { return Vec2{std::cos(deg * std::numbers::pi / 180), std::sin(deg * std::numbers::pi / 180)}; };
    std::vector<Vec2> p{{0, 0}, polar(0), polar(120), polar(240)};
    CHECK(min_angular_resolution(star, p) == doctest::Approx(2 * std::numbers::pi / 3));

    Graph path = parse_edge_list("a b\nb c");
    CHECK(min_angular_resolution(path, std::vector<Vec2>{{0, 0}, {1, 0}, {2, 0}}) == doctest::Approx(std::numbers::pi));

    Graph k2 = parse_edge_list("a b");
    CHECK(min_angular_resolution(k2, std::vector<Vec2>{{0, 0}, {1, 0}}) == doctest::Approx(2 * std::numbers::pi));
}

TEST_CASE("angular resolution never beats the pigeonhole bound") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coord(-50, 50);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 3 + rng() % 12;
        Graph g = oracle::random_graph(n, 0.4, rng);
        if (g.max_degree() == 0) continue;
        std::vector<Vec2> p(n);
        for (auto& q : p) q = {coord(rng), coord(rng)};
        CHECK(min_angular_resolution(g, p) <= 2 * std::numbers::pi / g.max_degree() + 1e-12);
    }
}

TEST_CASE("edge_length_stats") {
    Graph path = parse_edge_list("a b\nb c\nc d");
    auto s = edge_length_stats(path, std::vector<Vec2>{{0, 0}, {80, 0}, {80, 80}, {160, 80}});
    CHECK(s.mean == doctest::Approx(80));
    CHECK(s.cv == doctest::Approx(0).scale(1));

    Graph two = parse_edge_list("a b\nc d");
    auto t = edge_length_stats(two, std::vector<Vec2>{{0, 0}, {1, 0}, {0, 5}, {3, 5}});
    CHECK(t.mean == doctest::Approx(2));
    CHECK(t.cv == doctest::Approx(0.5));

    auto scaled = edge_length_stats(two, std::vector<Vec2>{{0, 0}, {7, 0}, {0, 35}, {21, 35}});
    CHECK(scaled.mean == doctest::Approx(14));
    CHECK(scaled.cv == doctest::Approx(0.5));

    CHECK_THROWS_AS(edge_length_stats(parse_edge_list("a\nb"), std::vector<Vec2>{{0, 0}, {1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("bounding_area") {
    CHECK(bounding_area(std::vector<Vec2>{{0, 0}, {2, 3}}) == 6);
    CHECK(bounding_area(std::vector<Vec2>{{4, 4}}) == 0);
    CHECK(bounding_area(std::vector<Vec2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}) == 1);
    CHECK(bounding_area(std::vector<Vec2>{{0, 0}, {1, 1}, {2, 2}, {5, 0}}) == 10);
    CHECK_THROWS_AS(bounding_area(std::vector<Vec2>{}), std::invalid_argument);
}

TEST_CASE("centrality_radius_correlation") {
    // Radii 1, 2, 3 around a centroid at the origin.
    std::vector<Vec2> p{{1, 0}, {2, 0}, {-3, 0}};
    CHECK(centrality_radius_correlation(std::vector<double>{3, 2, 1}, p) == doctest::Approx(-1.0));
    CHECK(centrality_radius_correlation(std::vector<double>{1, 2, 3}, p) == doctest::Approx(1.0));
    CHECK(centrality_radius_correlation(std::vector<double>{4, 4, 4}, p) == 0.0);
    CHECK_THROWS_AS(centrality_radius_correlation(std::vector<double>{1, 2}, std::vector<Vec2>{{0, 0}, {1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("spearman matches the rank-difference formula on every permutation of five") {
    std::vector<int> perm{1, 2, 3, 4, 5};
    std::vector<int> identity = perm;
    int checked = 0;
    do {
        // Values are a strictly increasing transform of the ranks.
        std::vector<double> a, b;
        for (int r : identity) a.push_back(std::exp(0.7 * r));
        for (int r : perm) b.push_back(r * r * 10.0 - 3.0);
        double want = oracle::spearman_rank_formula(identity, perm);
        CHECK(spearman(a, b) == doctest::Approx(want).epsilon(1e-12));
        ++checked;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(checked == 120);
}

TEST_CASE("spearman averages tied ranks") {
    // Ranks of {1, 2, 2, 3} are {1, 2.5, 2.5, 4}; Pearson against {1, 2, 3, 4}.
    std::vector<double> a{1, 2, 2, 3}, b{1, 2, 3, 4};
    double ra[] = {1, 2.5, 2.5, 4}, rb[] = {1, 2, 3, 4};
    double sab = 0, saa = 0, sbb = 0;
    for (int i = 0; i < 4; ++i) {
        sab += (ra[i] - 2.5) * (rb[i] - 2.5);
        saa += (ra[i] - 2.5) * (ra[i] - 2.5);
        sbb += (rb[i] - 2.5) * (rb[i] - 2.5);
    }
    CHECK(spearman(a, b) == doctest::Approx(sab / std::sqrt(saa * sbb)));
}

TEST_CASE("radius correlation ignores rigid motions and monotone centrality transforms") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> coord(-100, 100);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 3 + rng() % 20;
        std::vector<Vec2> p(n);
        std::vector<double> c(n), c2(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = {coord(rng), coord(rng)};
            c[i] = std::abs(coord(rng));
            c2[i] = std::log1p(c[i]) * 3.0 + 1.0;
        }
        double a = coord(rng);
        std::vector<Vec2> moved;
        for (auto q : p)
            moved.push_back(Vec2{std::cos(a) * q.x - std::sin(a) * q.y, std::sin(a) * q.x + std::cos(a) * q.y} +
                            Vec2{40, -25});
        double base = centrality_radius_correlation(c, p);
        CHECK(base >= -1.0);
        CHECK(base <= 1.0);
        CHECK(centrality_radius_correlation(c, moved) == doctest::Approx(base));
        CHECK(centrality_radius_correlation(c2, p) == doctest::Approx(base));
    }
}

TEST_CASE("compute_metrics and JSON") {
    Graph path = parse_edge_list("a b\nb c");
    std::vector<Vec2> p{{0, 0}, {80, 0}, {160, 0}};
    auto m = compute_metrics(path, p, degree_centrality(path));
    CHECK(m.crossings == 0);
    CHECK(*m.edge_len_mean == doctest::Approx(80));
    CHECK(*m.edge_len_cv == doctest::Approx(0).scale(1));
    CHECK(m.bbox_area == 0);
    CHECK(*m.centrality_radius_rho == doctest::Approx(-1.0).epsilon(1e-9));

    auto j = nlohmann::json::parse(to_json(m));
    for (const char* key : {"crossings", "min_angle", "edge_len_mean", "edge_len_cv", "bbox_area",
                            "centrality_radius_rho"})
        CHECK(j.contains(key));
    CHECK(j.size() == 6);

    Graph lonely = parse_edge_list("a\nb");
    auto n = nlohmann::json::parse(to_json(compute_metrics(lonely, std::vector<Vec2>{{0, 0}, {1, 1}},
                                                           degree_centrality(lonely))));
    CHECK(n["edge_len_mean"].is_null());
    CHECK(n["centrality_radius_rho"].is_null());
}
