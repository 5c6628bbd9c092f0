#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "socgrav/centrality.hpp"

using namespace socgrav;

namespace {

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

}  // namespace

TEST_CASE("degree centrality") {
    CHECK(degree_centrality(parse_edge_list("a b\nb c")).values == std::vector<double>{1, 2, 1});
    CHECK(degree_centrality(parse_edge_list("s a\ns b\ns c")).values == std::vector<double>{3, 1, 1, 1});
    CHECK(degree_centrality(parse_edge_list("a b\nz")).values[2] == 0.0);
}

TEST_CASE("closeness centrality") {
    auto path = closeness_centrality(parse_edge_list("a b\nb c")).values;
    CHECK(path[1] == doctest::Approx(1.0));
    CHECK(path[0] == doctest::Approx(2.0 / 3.0));
    CHECK(path[2] == doctest::Approx(2.0 / 3.0));

    for (double x : closeness_centrality(complete(5)).values) CHECK(x == doctest::Approx(1.0));

    Graph pairs = parse_edge_list("a b\nc d");
    auto expect = oracle::closeness(pairs);
    auto got = closeness_centrality(pairs).values;
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(expect[i] == doctest::Approx(1.0));
        CHECK(got[i] == doctest::Approx(expect[i]));
    }

    CHECK(closeness_centrality(parse_edge_list("a b\nz")).values[2] == 0.0);
}

TEST_CASE("closeness matches Floyd-Warshall oracle on random graphs") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(1 + rng() % 10, 0.3, rng);
        auto expect = oracle::closeness(g);
        auto got = closeness_centrality(g).values;
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-12));
    }
}

TEST_CASE("betweenness centrality small cases") {
    auto star = betweenness_centrality(parse_edge_list("s a\ns b\ns c")).values;
    CHECK(star == std::vector<double>{3, 0, 0, 0});

    for (double x : betweenness_centrality(complete(6)).values) CHECK(x == 0.0);

    auto path = betweenness_centrality(parse_edge_list("a b\nb c\nc d")).values;
    auto expect = oracle::betweenness(parse_edge_list("a b\nb c\nc d"));
    CHECK(expect == std::vector<double>{0, 2, 2, 0});
    for (std::size_t i = 0; i < path.size(); ++i) CHECK(path[i] == doctest::Approx(expect[i]));

    // C4: each opposite pair has two shortest paths, one through each middle vertex.
    auto cycle = betweenness_centrality(parse_edge_list("a b\nb c\nc d\nd a")).values;
    for (double x : cycle) CHECK(x == doctest::Approx(0.5));
}

TEST_CASE("betweenness matches path-enumeration oracle for n <= 10") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        double p = 0.1 + 0.6 * (rng() % 100) / 100.0;
        Graph g = oracle::random_graph(1 + rng() % 10, p, rng);
        auto expect = oracle::betweenness(g);
        auto got = betweenness_centrality(g).values;
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expect[i]) <= 1e-9);
    }
}

TEST_CASE("degree and closeness are permutation equivariant") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng() % 10;
        Graph g = oracle::random_graph(n, 0.35, rng);
        std::vector<VertexId> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> moved;
        for (auto e : g.edges()) moved.push_back({perm[e.u], perm[e.v]});
        Graph h(n, moved);
        auto dg = degree_centrality(g).values, dh = degree_centrality(h).values;
        auto cg = closeness_centrality(g).values, ch = closeness_centrality(h).values;
        auto bg = betweenness_centrality(g).values, bh = betweenness_centrality(h).values;
        for (VertexId v = 0; v < n; ++v) {
            CHECK(dh[perm[v]] == dg[v]);
            CHECK(ch[perm[v]] == doctest::Approx(cg[v]));
            CHECK(bh[perm[v]] == doctest::Approx(bg[v]));
        }
    }
}

TEST_CASE("uniform centrality") {
    CHECK(uniform_centrality(parse_edge_list("a b")).values == std::vector<double>{1, 1});
    CHECK(uniform_centrality(Graph()).values.empty());
    for (double x : uniform_centrality(parse_edge_list("a b\nb c\nd")).values) CHECK(x == 1.0);
}

TEST_CASE("normalize_mass") {
    auto m = normalize_mass({CentralityKind::degree, {1, 2, 1}}, 0.05).values;
    CHECK(m[0] == doctest::Approx(0.75));
    CHECK(m[1] == doctest::Approx(1.5));
    CHECK(m[2] == doctest::Approx(0.75));

    CHECK(normalize_mass({CentralityKind::betweenness, {0, 0, 0}}).values == std::vector<double>{1, 1, 1});

    auto lifted = normalize_mass({CentralityKind::betweenness, {0, 4}}, 0.05).values;
    CHECK(mean(lifted) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lifted[0] >= 0.05);
    CHECK(lifted[1] > lifted[0]);

    CHECK_THROWS_AS(normalize_mass({CentralityKind::degree, {1, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_mass({CentralityKind::degree, {1, 1}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(normalize_mass({CentralityKind::degree, {1, 1}}, 1.5), std::invalid_argument);
}

TEST_CASE("mass vectors keep mean one, the floor and the argmax") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> floor_dist(0.01, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 40;
        std::vector<double> c(n);
        for (auto& x : c) {
            // Heavy-tailed with plenty of zeros, like betweenness on trees.
            double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            x = r < 0.3 ? 0.0 : std::pow(10.0, 4.0 * r);
        }
        double floor = floor_dist(rng);
        auto m = normalize_mass({CentralityKind::betweenness, c}, floor).values;
        CHECK(std::abs(mean(m) - 1.0) <= 1e-9);
        for (double x : m) CHECK(x >= floor);
        auto argmax_c = std::max_element(c.begin(), c.end()) - c.begin();
        CHECK(m[argmax_c] == *std::max_element(m.begin(), m.end()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (c[i] <= c[j]) CHECK(m[i] <= m[j]);
    }
}
