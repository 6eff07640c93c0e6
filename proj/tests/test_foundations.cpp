#include "doctest.h"

#include <cstdlib>

#include "coarse/bits.hpp"
#include "coarse/budget.hpp"
#include "coarse/cover.hpp"
#include "coarse/errors.hpp"
#include "coarse/generators.hpp"
#include "coarse/graph.hpp"
#include "coarse/rational.hpp"
#include "coarse/weight_fn.hpp"

#include "oracles.hpp"

using namespace coarse;

TEST_CASE("rational normalization and accessors") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(7).is_integer());
    CHECK_FALSE(Rat(7, 2).is_integer());
    CHECK(Rat(0).is_zero());
    CHECK(Rat(-1, 3).is_negative());
    CHECK_THROWS_AS(Rat(1, 0), Error);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 3) / Rat(2, 3) == Rat(1, 2));
    CHECK(Rat(1, 3) * Rat(3) == Rat(1));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), Error);

    Rat tenth(1, 10);
    Rat sum(0);
    for (int i = 0; i < 10; ++i) sum += tenth;
    CHECK(sum == Rat(1));
}

TEST_CASE("rational ordering") {
    CHECK(Rat(2, 3) < Rat(3, 4));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(1, 2) <= Rat(1, 2));
    CHECK(Rat(5, 4) > Rat(1));
    CHECK(Rat(7, 3) >= Rat(7, 3));
}

TEST_CASE("rational floor and ceil") {
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(6).floor() == 6);
    CHECK(Rat(6).ceil() == 6);
}

TEST_CASE("rational text round trip") {
    CHECK(Rat(7).str() == "7");
    CHECK(Rat(7, 2).str() == "7/2");
    CHECK(Rat(7).str_fraction() == "7/1");
    CHECK(Rat(-3, 4).str() == "-3/4");
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("-7/2") == Rat(-7, 2));
    CHECK(Rat::parse("4/6") == Rat(2, 3));
    CHECK_THROWS_AS(Rat::parse("seven"), InputError);
    CHECK_THROWS_AS(Rat::parse("1/2x"), InputError);
    CHECK_THROWS_AS(Rat::parse(""), InputError);
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
}

TEST_CASE("rational overflow throws instead of wrapping") {
    Rat big(INT64_MAX);
    CHECK_THROWS_AS(big + Rat(1), Error);
    CHECK_THROWS_AS(Rat(1LL << 40) * Rat(1LL << 40), Error);
    // near-limit values that stay representable survive
    CHECK(Rat(INT64_MAX) - Rat(1) == Rat(INT64_MAX - 1));
}

TEST_CASE("bits basics") {
    Bits b(70);
    CHECK(b.size() == 70);
    CHECK_FALSE(b.any());
    b.set(0);
    b.set(69);
    b.set(64);
    CHECK(b.test(0));
    CHECK(b.test(64));
    CHECK_FALSE(b.test(1));
    CHECK(b.count() == 3);
    CHECK(b.any());
    CHECK(b.to_vector() == std::vector<int>{0, 64, 69});
    b.reset(64);
    CHECK(b.count() == 2);
    b.clear();
    CHECK_FALSE(b.any());
}

TEST_CASE("bits set algebra") {
    Bits a = Bits::of(10, {1, 3, 5});
    Bits b = Bits::of(10, {3, 5, 7});
    Bits u = a;
    u |= b;
    CHECK(u.to_vector() == std::vector<int>{1, 3, 5, 7});
    Bits i = a;
    i &= b;
    CHECK(i.to_vector() == std::vector<int>{3, 5});
    Bits d = a;
    d.subtract(b);
    CHECK(d.to_vector() == std::vector<int>{1});
    CHECK(i.is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(a.intersects(b));
    CHECK_FALSE(d.intersects(b));
    CHECK(a == Bits::of(10, {5, 3, 1}));
}

TEST_CASE("budgets from environment") {
    unsetenv("COARSE_TW_BUDGET");
    Budgets def = Budgets::from_env();
    CHECK(def.enumeration_budget == 10'000'000);
    CHECK(def.indicator_max_n == 20);
    CHECK(def.treewidth_max_n == 12);

    setenv("COARSE_TW_BUDGET", "1024", 1);
    Budgets b = Budgets::from_env();
    CHECK(b.enumeration_budget == 1024);
    CHECK(b.indicator_max_n == 10);   // 2^10 <= 1024 < 2^11
    CHECK(b.treewidth_max_n == 7);    // 2^7 * 7 <= 1024 < 2^8 * 8

    setenv("COARSE_TW_BUDGET", "nope", 1);
    CHECK_THROWS_AS(Budgets::from_env(), InputError);
    setenv("COARSE_TW_BUDGET", "-3", 1);
    CHECK_THROWS_AS(Budgets::from_env(), InputError);
    unsetenv("COARSE_TW_BUDGET");
}

TEST_CASE("graph construction enforces simplicity") {
    CHECK_THROWS_AS(Graph(-1), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), InputError);

    Graph g = Graph::from_edges(4, {{2, 3}, {0, 2}, {0, 1}});
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.has_edge(3, 2));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.degree(0) == 2);
    CHECK(g.max_degree() == 2);
    std::vector<int> nbrs(g.neighbors(0).begin(), g.neighbors(0).end());
    CHECK(nbrs == std::vector<int>{1, 2}); // sorted ascending
    CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}});
}

TEST_CASE("bfs hops and connectivity") {
    Graph p5 = make_path(5);
    CHECK(p5.bfs_hops(0) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(p5.bfs_hops(2) == std::vector<int>{2, 1, 0, 1, 2});
    CHECK(p5.is_connected());

    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto d = two.bfs_hops(0);
    CHECK(d[1] == 1);
    CHECK(d[2] == -1);
    CHECK_FALSE(two.is_connected());

    // cross-check against the oracle BFS on a grid
    Graph grid = make_grid(3, 4);
    auto adj = oracle::adjacency(grid.num_vertices(), grid.edge_list());
    for (int s = 0; s < grid.num_vertices(); ++s)
        CHECK(grid.bfs_hops(s) == oracle::bfs_hops(adj, s));
}

TEST_CASE("weighted graph distances are exact") {
    WeightedGraph g = WeightedGraph::from_edges(
        4, {{0, 1, Rat(1, 2)}, {1, 2, Rat(1, 3)}, {0, 2, Rat(9, 10)}});
    auto d = g.dijkstra(0);
    REQUIRE(d[2].has_value());
    CHECK(*d[2] == Rat(5, 6)); // 1/2 + 1/3 beats the direct 9/10 edge
    CHECK_FALSE(d[3].has_value());
    CHECK(*g.min_edge_weight() == Rat(1, 3));

    Graph sk = g.skeleton();
    CHECK(sk.num_edges() == 3);
    CHECK(sk.has_edge(0, 2));

    CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, Rat(-1)}}), InputError);
    CHECK_FALSE(WeightedGraph(3).min_edge_weight().has_value());
}

TEST_CASE("ball vertices") {
    Graph c8 = make_cycle(8);
    CHECK(ball_vertices(c8, 0, Rat(2)) == std::vector<int>{0, 1, 2, 6, 7});
    CHECK(ball_vertices(c8, 0, Rat(0)) == std::vector<int>{0});
    CHECK(ball_vertices(c8, 0, Rat(-1)).empty());
    // fractional radius on hop metric: only whole hops fit
    Graph p5 = make_path(5);
    CHECK(ball_vertices(p5, 2, Rat(3, 2)) == std::vector<int>{1, 2, 3});
    CHECK(ball_bits(c8, 0, 2).to_vector() == std::vector<int>{0, 1, 2, 6, 7});
}

TEST_CASE("components") {
    Graph c6 = make_cycle(6);
    auto comps = components(c6, {0, 3});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{1, 2});
    CHECK(comps[1] == std::vector<int>{4, 5});
    CHECK(components(c6).size() == 1);

    Bits alive = Bits::of(6, {1, 2, 4, 5});
    auto cb = components_bits(c6, alive);
    REQUIRE(cb.size() == 2);
    CHECK(cb[0].to_vector() == std::vector<int>{1, 2});
    CHECK(cb[1].to_vector() == std::vector<int>{4, 5});
}

TEST_CASE("greedy distance-r independent set") {
    Graph p5 = make_path(5);
    CHECK(max_distance_r_independent_set(p5, 2) == std::vector<int>{0, 3});
    CHECK(max_distance_r_independent_set(p5, 1) == std::vector<int>{0, 2, 4});
    CHECK(is_distance_r_independent(p5, {0, 3}, 2));
    CHECK_FALSE(is_distance_r_independent(p5, {0, 2}, 2));

    // independence and maximality on a seeded irregular graph
    Graph g = make_random_geometric(30, 10, 2, 7);
    for (int r = 1; r <= 3; ++r) {
        auto members = max_distance_r_independent_set(g, r);
        CHECK(is_distance_r_independent(g, members, r));
        for (int v = 0; v < g.num_vertices(); ++v) {
            auto dist = g.bfs_hops(v);
            bool near = false;
            for (int m : members)
                if (dist[m] >= 0 && dist[m] <= r) near = true;
            CHECK(near); // maximal: nothing can be added
        }
    }
}

TEST_CASE("distance oracle matches bfs") {
    Graph g = make_grid(3, 3);
    DistanceOracle oracle(g);
    for (int u = 0; u < 9; ++u) {
        auto d = g.bfs_hops(u);
        for (int v = 0; v < 9; ++v) CHECK(oracle.dist(u, v) == d[v]);
    }
}

TEST_CASE("weight functions") {
    CHECK_THROWS_AS(WeightFn({Rat(1), Rat(-1)}), InputError);
    WeightFn uni = WeightFn::uniform(4);
    CHECK(uni.total() == Rat(4));
    CHECK(uni.at(3) == Rat(1));

    WeightFn ind = WeightFn::indicator(5, {1, 3});
    CHECK(ind.total() == Rat(2));
    CHECK(ind.at(0) == Rat(0));
    CHECK(ind.at(1) == Rat(1));
    CHECK(ind.sum_over(std::vector<int>{0, 1, 3}) == Rat(2));
    CHECK(ind.sum_over(Bits::of(5, {3, 4})) == Rat(1));
    CHECK_THROWS_AS(WeightFn::indicator(3, {5}), InputError);

    WeightFn frac(std::vector<Rat>{Rat(1, 3), Rat(1, 6), Rat(1, 2)});
    CHECK(frac.total() == Rat(1));
}

TEST_CASE("ceil_log2 and binomial_capped") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(8) == 3);
    CHECK(ceil_log2(9) == 4);
    CHECK(binomial_capped(5, 2, 1000) == 10);
    CHECK(binomial_capped(5, 0, 1000) == 1);
    CHECK(binomial_capped(64, 32, 1000) == 1001); // capped
}
