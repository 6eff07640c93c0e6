#include "doctest.h"

#include <numeric>

#include "coarse/cover.hpp"
#include "coarse/errors.hpp"
#include "coarse/generators.hpp"
#include "coarse/separator.hpp"
#include "coarse/treewidth.hpp"

#include "oracles.hpp"

using namespace coarse;

namespace {

Budgets test_budgets() { return Budgets{}; }

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> a(static_cast<size_t>(g.num_vertices()));
    std::iota(a.begin(), a.end(), 0);
    return a;
}

std::vector<int> union_of(const Graph& g, const std::vector<Ball>& balls) {
    Bits u(g.num_vertices());
    for (const Ball& b : balls)
        for (int v : ball_vertices(g, b.center, b.radius)) u.set(v);
    return u.to_vector();
}

} // namespace

TEST_CASE("exact cover on a path") {
    Graph p5 = make_path(5);
    auto cover = cover_exact(p5, all_vertices(p5), 1, Rat(2), test_budgets());
    REQUIRE(cover.has_value());
    CHECK(*cover == std::vector<Ball>{{2, Rat(2)}});

    CHECK_FALSE(cover_exact(p5, all_vertices(p5), 1, Rat(1), test_budgets()).has_value());

    auto two = cover_exact(p5, all_vertices(p5), 2, Rat(1), test_budgets());
    REQUIRE(two.has_value());
    CHECK(two->size() == 2);
    CHECK(union_of(p5, *two) == all_vertices(p5));
}

TEST_CASE("exact cover on a grid picks the lexicographically first witness") {
    Graph grid = make_grid(3, 3);
    auto cover = cover_exact(grid, all_vertices(grid), 1, Rat(2), test_budgets());
    REQUIRE(cover.has_value());
    CHECK(*cover == std::vector<Ball>{{4, Rat(2)}}); // 4 is the only radius-2 center
}

TEST_CASE("empty target needs no balls") {
    Graph p3 = make_path(3);
    auto cover = cover_exact(p3, {}, 1, Rat(1), test_budgets());
    REQUIRE(cover.has_value());
    CHECK(cover->empty());
}

TEST_CASE("greedy cover prefers big gain then low center id") {
    Graph p5 = make_path(5);
    auto cover = cover_greedy(p5, all_vertices(p5), Rat(1));
    REQUIRE(cover.size() == 2);
    CHECK(cover[0] == Ball{1, Rat(1)}); // covers {0,1,2}, beats center 0's two
    CHECK(cover[1] == Ball{3, Rat(1)});
    CHECK(union_of(p5, cover) == all_vertices(p5));
}

TEST_CASE("is_coverable reports the mode it ran") {
    Graph p5 = make_path(5);
    auto exact = is_coverable(p5, all_vertices(p5), 1, Rat(1), SearchMode::exact, test_budgets());
    CHECK(exact.exact);
    CHECK_FALSE(exact.cover.has_value()); // a proof of impossibility
    auto greedy = is_coverable(p5, all_vertices(p5), 1, Rat(1), SearchMode::greedy,
                               test_budgets());
    CHECK_FALSE(greedy.exact);
    REQUIRE(greedy.cover.has_value()); // greedy always covers, maybe over budget
    CHECK(greedy.cover->size() > 1);
}

TEST_CASE("cover search respects the enumeration budget") {
    Graph g = make_path(12);
    Budgets tiny;
    tiny.enumeration_budget = 10; // C(12, 3) = 220 candidate sets
    CHECK_THROWS_AS(cover_exact(g, all_vertices(g), 3, Rat(1), tiny), BudgetError);
}

TEST_CASE("exact cover feasibility matches brute force on all small graphs") {
    for (int n = 2; n <= 6; ++n) {
        for (std::uint32_t mask : oracle::connected_graphs(n)) {
            auto edges = oracle::edges_of_mask(n, mask);
            Graph g = Graph::from_edges(n, edges);
            auto a = all_vertices(g);
            for (int k = 1; k <= 2; ++k)
                for (int r = 1; r <= 2; ++r) {
                    auto found = cover_exact(g, a, k, Rat(r), test_budgets());
                    CHECK(found.has_value() == oracle::coverable(n, edges, a, k, r));
                    if (found.has_value()) {
                        CHECK(found->size() <= static_cast<size_t>(k));
                        CHECK(union_of(g, *found) == a);
                    }
                }
        }
    }
}

TEST_CASE("balanced separator predicate") {
    Graph c6 = make_cycle(6);
    WeightFn uni = WeightFn::uniform(6);
    CHECK(is_balanced_separator(c6, uni, {0, 3}));
    CHECK_FALSE(is_balanced_separator(c6, uni, {0}));
    CHECK(is_balanced_separator(c6, uni, {}) == false); // one component of weight 6
    // indicator mass split across the two arcs balances; concentrated in one arc it cannot
    CHECK(is_balanced_separator(c6, WeightFn::indicator(6, {1, 4}), {0, 3}));
    CHECK_FALSE(is_balanced_separator(c6, WeightFn::indicator(6, {1, 2}), {0, 3}));
}

TEST_CASE("exact separator search on paths") {
    Budgets b = test_budgets();
    Graph p8 = make_path(8);
    auto w8 = find_separator(p8, WeightFn::uniform(8), 1, 1, SearchMode::exact, b);
    REQUIRE(w8.has_value());
    CHECK(w8->balls == std::vector<Ball>{{2, Rat(1)}}); // first center whose ball balances
    CHECK(w8->union_set == std::vector<int>{1, 2, 3});

    Graph p9 = make_path(9);
    auto w9 = find_separator(p9, WeightFn::uniform(9), 1, 1, SearchMode::exact, b);
    REQUIRE(w9.has_value());
    CHECK(w9->balls == std::vector<Ball>{{3, Rat(1)}});
    CHECK(w9->union_set == std::vector<int>{2, 3, 4});
}

TEST_CASE("exact separator search proves impossibility on a long cycle") {
    Graph c16 = make_cycle(16);
    auto w = find_separator(c16, WeightFn::uniform(16), 1, 1, SearchMode::exact, test_budgets());
    CHECK_FALSE(w.has_value()); // one ball leaves a 13-vertex arc
}

TEST_CASE("exact separator search on a grid") {
    Graph grid = make_grid(3, 3);
    auto w = find_separator(grid, WeightFn::uniform(9), 1, 2, SearchMode::exact, test_budgets());
    REQUIRE(w.has_value());
    CHECK(w->balls == std::vector<Ball>{{0, Rat(2)}}); // leaves {5,7,8}, weight 3 of 9
}

TEST_CASE("greedy separator search") {
    Graph p9 = make_path(9);
    auto w = find_separator(p9, WeightFn::uniform(9), 1, 1, SearchMode::greedy, test_budgets());
    REQUIRE(w.has_value());
    CHECK(w->balls == std::vector<Ball>{{4, Rat(1)}}); // the midpoint minimizes the worst side
    CHECK(is_balanced_separator(p9, WeightFn::uniform(9), w->union_set));

    Graph c16 = make_cycle(16);
    CHECK_FALSE(find_separator(c16, WeightFn::uniform(16), 1, 1, SearchMode::greedy,
                               test_budgets())
                    .has_value());
}

TEST_CASE("separator existence matches brute force on all small graphs") {
    Budgets b = test_budgets();
    for (int n = 2; n <= 6; ++n) {
        for (std::uint32_t mask : oracle::connected_graphs(n)) {
            auto edges = oracle::edges_of_mask(n, mask);
            Graph g = Graph::from_edges(n, edges);
            std::vector<std::vector<long long>> weightings = {
                std::vector<long long>(static_cast<size_t>(n), 1)};
            std::vector<long long> skewed(static_cast<size_t>(n), 0);
            skewed[0] = 3;
            skewed[static_cast<size_t>(n - 1)] = 1;
            weightings.push_back(skewed);
            for (const auto& w : weightings) {
                std::vector<Rat> rw;
                for (long long x : w) rw.push_back(Rat(x));
                WeightFn mu{rw};
                for (int k = 1; k <= 2; ++k)
                    for (int r = 0; r <= 1; ++r) {
                        auto found = find_separator(g, mu, k, r, SearchMode::exact, b);
                        CHECK(found.has_value() ==
                              oracle::separator_exists(n, edges, w, k, r));
                        if (found.has_value())
                            CHECK(is_balanced_separator(g, mu, found->union_set));
                    }
            }
        }
    }
}

TEST_CASE("radius zero balls are single vertices") {
    Graph p3 = make_path(3);
    auto w = find_separator(p3, WeightFn::uniform(3), 1, 0, SearchMode::exact, test_budgets());
    REQUIRE(w.has_value());
    CHECK(w->balls == std::vector<Ball>{{1, Rat(0)}});
    CHECK(w->union_set == std::vector<int>{1});
}

TEST_CASE("balanced separator number over indicator weights") {
    Budgets b = test_budgets();
    CHECK(bsn_over_indicators(make_path(2), 0, 3, b) == 1);
    CHECK(bsn_over_indicators(make_cycle(4), 0, 3, b) == 2);
    CHECK(bsn_over_indicators(make_cycle(16), 0, 1, b) == std::nullopt); // k_max too small
    CHECK(bsn_over_indicators(make_cycle(16), 1, 2, b) == 2);

    // matches the brute-force sweep on every small graph
    for (int n = 2; n <= 5; ++n)
        for (std::uint32_t mask : oracle::connected_graphs(n)) {
            auto edges = oracle::edges_of_mask(n, mask);
            Graph g = Graph::from_edges(n, edges);
            for (int r = 0; r <= 1; ++r)
                CHECK(bsn_over_indicators(g, r, n, b) == oracle::bsn(n, edges, r, n));
        }
}

TEST_CASE("indicator sweep is gated by budget") {
    Budgets b = test_budgets();
    b.indicator_max_n = 4;
    CHECK_THROWS_AS(bsn_over_indicators(make_path(5), 0, 2, b), BudgetError);
}

TEST_CASE("exact treewidth on known graphs") {
    Budgets b = test_budgets();
    CHECK(exact_treewidth(Graph(0), b) == 0);
    CHECK(exact_treewidth(Graph(3), b) == 0);
    CHECK(exact_treewidth(make_path(5), b) == 1);
    CHECK(exact_treewidth(make_cycle(5), b) == 2);
    CHECK(exact_treewidth(make_path_universal(5), b) == 2);
    CHECK(exact_treewidth(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                          b) == 3); // K4
    CHECK(exact_treewidth(make_grid(3, 3), b) == 3);
}

TEST_CASE("exact treewidth matches the elimination oracle") {
    Budgets b = test_budgets();
    for (int n = 2; n <= 6; ++n)
        for (std::uint32_t mask : oracle::connected_graphs(n)) {
            auto edges = oracle::edges_of_mask(n, mask);
            Graph g = Graph::from_edges(n, edges);
            CHECK(exact_treewidth(g, b) == oracle::elimination_treewidth(n, edges));
        }
    // spot checks at n = 7
    for (const Graph& g : {make_path(7), make_cycle(7), make_path_universal(6),
                           make_binary_tree(7)})
        CHECK(exact_treewidth(g, b) ==
              oracle::elimination_treewidth(g.num_vertices(), g.edge_list()));
}

TEST_CASE("treewidth is gated by budget") {
    Budgets b = test_budgets();
    b.treewidth_max_n = 4;
    CHECK_THROWS_AS(exact_treewidth(make_path(5), b), BudgetError);
}

TEST_CASE("treewidth sandwiched by the separator number") {
    // bsn - 1 <= tw <= 3 bsn with radius-0 balls, checked exhaustively
    Budgets b = test_budgets();
    for (int n = 2; n <= 5; ++n)
        for (std::uint32_t mask : oracle::connected_graphs(n)) {
            auto edges = oracle::edges_of_mask(n, mask);
            Graph g = Graph::from_edges(n, edges);
            auto k = bsn_over_indicators(g, 0, n, b);
            REQUIRE(k.has_value()); // n vertices always suffice
            int tw = exact_treewidth(g, b);
            CHECK(*k - 1 <= tw);
            CHECK(tw <= 3 * *k);
        }
}

TEST_CASE("doubling dimension estimate") {
    CHECK(estimate_doubling_dimension(make_path(9), 4) == 1);
    CHECK(estimate_doubling_dimension(make_cycle(12), 3) == 1); // two balls per arc

    CHECK(estimate_doubling_dimension(
              Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 2) == 0);
    // larger radii cannot shrink the estimate on a fixed graph family
    int small = estimate_doubling_dimension(make_grid(5, 5), 1);
    int large = estimate_doubling_dimension(make_grid(5, 5), 4);
    CHECK(small >= 1);
    CHECK(large >= small);
}
