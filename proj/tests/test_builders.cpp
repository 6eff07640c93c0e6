#include "doctest.h"

#include "coarse/builders.hpp"
#include "coarse/errors.hpp"
#include "coarse/generators.hpp"

#include "oracles.hpp"

using namespace coarse;

namespace {

std::vector<int> cover_union(const Graph& g, const std::vector<Ball>& balls) {
    Bits u(g.num_vertices());
    for (const Ball& b : balls)
        for (int v : ball_vertices(g, b.center, b.radius)) u.set(v);
    return u.to_vector();
}

bool same_decomposition(const TreeDecomposition& a, const TreeDecomposition& b) {
    if (a.edges != b.edges || a.nodes.size() != b.nodes.size()) return false;
    for (size_t i = 0; i < a.nodes.size(); ++i) {
        if (a.nodes[i].bag != b.nodes[i].bag) return false;
        if (a.nodes[i].cover.has_value() != b.nodes[i].cover.has_value()) return false;
        if (a.nodes[i].cover && *a.nodes[i].cover != *b.nodes[i].cover) return false;
    }
    return true;
}

} // namespace

TEST_CASE("round ball set potential") {
    RoundBallSet s{2, {{0, Rat(2)}, {1, Rat(4)}}};
    CHECK(s.is_round());
    CHECK(s.potential() == 6); // 2^1 + 2^2
    CHECK(s.max_radius() == Rat(4));

    RoundBallSet empty{3, {}};
    CHECK(empty.potential() == 0);
    CHECK(empty.max_radius() == Rat(0));
    CHECK(empty.is_round());

    RoundBallSet off{2, {{0, Rat(3)}}};
    CHECK_FALSE(off.is_round());
    CHECK_THROWS_AS(off.potential(), InvariantError);

    RoundBallSet zero{2, {{0, Rat(0)}}};
    CHECK_THROWS_AS(zero.potential(), InvariantError);

    RoundBallSet huge{1, {{0, Rat(62)}}};
    CHECK_THROWS_AS(huge.potential(), InvariantError); // 2^62 refuses to fit
}

TEST_CASE("crowding constants") {
    CHECK(crowding_alpha(1) == 3);
    CHECK(crowding_alpha(2) == 4);
    CHECK(crowding_alpha(3) == 5);
    CHECK(crowding_alpha(4) == 5);
    CHECK(crowding_alpha(8) == 6);

    CHECK(default_gamma_cap(1) == 0);
    CHECK(default_gamma_cap(2) == 8000);
    CHECK(default_gamma_cap(3) == 28529); // floor(18000 * log2 3)
    CHECK(default_gamma_cap(4) == 64000);

    BuilderParams p = make_builder_params(2, 3);
    CHECK(p.k == 2);
    CHECK(p.r == 3);
    CHECK(p.alpha == 4);
    CHECK(p.gamma_cap == 8000);
    CHECK(p.oracle_mode == SearchMode::exact);

    CHECK_THROWS_AS(make_builder_params(0, 1), InputError);
    CHECK_THROWS_AS(make_builder_params(1, 0), InputError);
}

TEST_CASE("uncrowd collapses a crowded pile into one wide ball") {
    Graph p30 = make_path(30);
    BuilderParams params = make_builder_params(2, 1); // alpha = 4, 2^alpha = 16
    RoundBallSet b{1, std::vector<Ball>(16, Ball{15, Rat(1)})};
    CHECK(b.potential() == 32);

    RoundBallSet out = uncrowd(p30, b, params);
    REQUIRE(out.balls.size() == 1);
    CHECK(out.balls[0].radius == Rat(5)); // (1 + alpha) * r
    CHECK(out.balls[0].center == 11);     // first vertex within alpha*r of the pile
    CHECK(out.potential() == 32);         // potential never grows

    // the union never shrinks
    auto before = cover_union(p30, b.balls);
    auto after = cover_union(p30, out.balls);
    Bits bb = Bits::of(30, before), ab = Bits::of(30, after);
    CHECK(bb.is_subset_of(ab));
}

TEST_CASE("uncrowd leaves sparse ball sets alone") {
    Graph p30 = make_path(30);
    BuilderParams params = make_builder_params(2, 1);
    RoundBallSet b{1, {{3, Rat(1)}, {20, Rat(2)}}};
    RoundBallSet out = uncrowd(p30, b, params);
    CHECK(out.balls == b.balls);
}

TEST_CASE("uncrowd prunes contained balls") {
    Graph p10 = make_path(10);
    BuilderParams params = make_builder_params(2, 1);

    RoundBallSet nested{1, {{5, Rat(2)}, {5, Rat(1)}}};
    RoundBallSet out = uncrowd(p10, nested, params);
    CHECK(out.balls == std::vector<Ball>{{5, Rat(2)}});

    // equal vertex sets keep the canonically first ball
    Graph p4 = make_path(4);
    RoundBallSet equal{1, {{0, Rat(8)}, {0, Rat(4)}}};
    RoundBallSet out2 = uncrowd(p4, equal, params);
    CHECK(out2.balls == std::vector<Ball>{{0, Rat(4)}});
}

TEST_CASE("uncrowd validates its input") {
    Graph p10 = make_path(10);
    BuilderParams params = make_builder_params(2, 1);
    CHECK_THROWS_AS(uncrowd(p10, RoundBallSet{2, {{0, Rat(2)}}}, params), InputError);
    CHECK_THROWS_AS(uncrowd(p10, RoundBallSet{1, {{0, Rat(3, 2)}}}, params), InputError);
}

TEST_CASE("simple builder on a path") {
    Graph p8 = make_path(8);
    TreeDecomposition td = decompose_simple(p8, make_builder_params(1, 1));
    CHECK(validate_tree_decomposition(p8, td).empty());
    CHECK(td.nodes[0].id == 0);

    int bound = 1 * (ceil_log2(8) + 2); // k (ceil log2 n + 2) = 5
    for (const auto& node : td.nodes) {
        REQUIRE(node.cover.has_value());
        CHECK(static_cast<int>(node.cover->size()) <= bound);
        for (const Ball& ball : *node.cover) CHECK(ball.radius == Rat(1));
        // the cover really covers the bag
        Bits bagset = Bits::of(8, node.bag);
        Bits cb = Bits::of(8, cover_union(p8, *node.cover));
        CHECK(bagset.is_subset_of(cb));
    }
}

TEST_CASE("simple builder handles edge cases") {
    TreeDecomposition empty = decompose_simple(Graph(0), make_builder_params(1, 1));
    REQUIRE(empty.nodes.size() == 1);
    CHECK(empty.nodes[0].bag.empty());
    REQUIRE(empty.nodes[0].cover.has_value());
    CHECK(empty.nodes[0].cover->empty());

    TreeDecomposition lone = decompose_simple(Graph(1), make_builder_params(1, 1));
    CHECK(validate_tree_decomposition(Graph(1), lone).empty());

    Graph forest = Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
    TreeDecomposition td = decompose_simple(forest, make_builder_params(1, 1));
    CHECK(validate_tree_decomposition(forest, td).empty());
}

TEST_CASE("simple builder reports oracle failure") {
    Graph c16 = make_cycle(16);
    CHECK_THROWS_AS(decompose_simple(c16, make_builder_params(1, 1)), DecomposeError);
    // two balls suffice on a cycle
    TreeDecomposition td = decompose_simple(c16, make_builder_params(2, 1));
    CHECK(validate_tree_decomposition(c16, td).empty());
}

TEST_CASE("simple builder is deterministic") {
    Graph g = make_random_geometric(24, 8, 2, 5);
    TreeDecomposition a = decompose_simple(g, make_builder_params(2, 1));
    TreeDecomposition b = decompose_simple(g, make_builder_params(2, 1));
    CHECK(same_decomposition(a, b));
}

TEST_CASE("simple builder respects the cover-size bound across families") {
    for (int r = 1; r <= 2; ++r)
        for (const Graph& g : {make_path(13), make_cycle(12), make_grid(3, 4)}) {
            int n = g.num_vertices();
            for (int k = 1; k <= 3; ++k) {
                TreeDecomposition td;
                try {
                    td = decompose_simple(g, make_builder_params(k, r));
                } catch (const DecomposeError&) {
                    continue; // oracle too weak at this k; a bigger one will land
                }
                CHECK(validate_tree_decomposition(g, td).empty());
                int bound = k * (ceil_log2(n) + 2);
                for (const auto& node : td.nodes) {
                    REQUIRE(node.cover.has_value());
                    CHECK(static_cast<int>(node.cover->size()) <= bound);
                }
                break;
            }
        }
}

TEST_CASE("round builder on a single vertex") {
    TreeDecomposition td = decompose_round(Graph(1), make_builder_params(2, 1));
    REQUIRE(td.nodes.size() == 1);
    CHECK(td.nodes[0].bag == std::vector<int>{0});
    REQUIRE(td.nodes[0].cover.has_value());
    CHECK(*td.nodes[0].cover == std::vector<Ball>{{0, Rat(1)}});
}

TEST_CASE("round builder on a long cycle") {
    Graph c16 = make_cycle(16);
    BuilderParams params = make_builder_params(2, 1);
    TreeDecomposition td = decompose_round(c16, params);
    CHECK(validate_tree_decomposition(c16, td).empty());

    Budgets b;
    CoverStats stats = coverability_stats(c16, td, 1, 2, SearchMode::exact, b);
    CHECK(stats.all_found);
    CHECK(stats.all_round);
    CHECK(stats.max_size <= params.gamma_cap + 2 * params.k);
    REQUIRE(stats.max_potential.has_value());
    CHECK(*stats.max_potential <= 4ULL * 2 * (ceil_log2(16) + 1)); // 4k(ceil log2 n + 1)
}

TEST_CASE("round builder produces round covers across families") {
    for (const Graph& g : {make_grid(3, 3), make_path(13), make_binary_tree(10),
                           make_random_geometric(20, 7, 2, 9)}) {
        int n = g.num_vertices();
        BuilderParams params = make_builder_params(2, 1);
        TreeDecomposition td = decompose_round(g, params);
        CHECK(validate_tree_decomposition(g, td).empty());
        Budgets b;
        CoverStats stats = coverability_stats(g, td, 1, 2, SearchMode::exact, b);
        CHECK(stats.all_round);
        CHECK(stats.max_size <= params.gamma_cap + 2 * params.k);
        REQUIRE(stats.max_potential.has_value());
        CHECK(*stats.max_potential <= 4ULL * 2 * (ceil_log2(n) + 1));
    }
}

TEST_CASE("round builder is deterministic") {
    Graph g = make_grid(4, 4);
    TreeDecomposition a = decompose_round(g, make_builder_params(2, 1));
    TreeDecomposition b = decompose_round(g, make_builder_params(2, 1));
    CHECK(same_decomposition(a, b));
}

TEST_CASE("round builder needs ball budget for the child covers") {
    // k = 1 means gamma_cap = 0: fine while the separator swallows whole
    // components, fatal the first time a child inherits a cover
    TreeDecomposition tiny = decompose_round(make_path(2), make_builder_params(1, 1));
    CHECK(validate_tree_decomposition(make_path(2), tiny).empty());
    CHECK_THROWS_AS(decompose_round(make_path(8), make_builder_params(1, 1)), DecomposeError);
}

TEST_CASE("round builder rejects mismatched alpha") {
    BuilderParams params = make_builder_params(2, 1);
    params.alpha = 7;
    CHECK_THROWS_AS(decompose_round(make_path(4), params), InputError);
}

TEST_CASE("builders honor the recursion limit") {
    BuilderParams params = make_builder_params(2, 1);
    params.recursion_limit = 1;
    CHECK_THROWS_AS(decompose_simple(make_path(32), params), DecomposeError);
}
