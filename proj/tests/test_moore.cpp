#include <doctest.h>

#include "cagex/catalog.hpp"
#include "cagex/errors.hpp"
#include "cagex/moore.hpp"

using namespace cagex;

TEST_SUITE("moore_bounds") {
    TEST_CASE("frozen cage orders") {
        CHECK(moore_cage_bound(3, 5) == 10);
        CHECK(moore_cage_bound(3, 6) == 14);
        CHECK(moore_cage_bound(3, 7) == 22);
        CHECK(moore_cage_bound(3, 8) == 30);
        CHECK(moore_cage_bound(7, 5) == 50);
        CHECK(moore_cage_bound(3, 3) == 4);
        CHECK(moore_cage_bound(3, 4) == 6);
        CHECK(moore_cage_bound(4, 5) == 17);
        CHECK(moore_cage_bound(57, 5) == 3250);
    }

    TEST_CASE("closed form equals the layer sum everywhere in range") {
        for (int k = 3; k <= 12; ++k)
            for (int g = 3; g <= 20; ++g)
                CHECK(moore_cage_bound(k, g) == moore_cage_bound_summation(k, g));
    }

    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(moore_cage_bound(2, 5), hypothesis_error);
        CHECK_THROWS_AS(moore_cage_bound(3, 2), hypothesis_error);
        CHECK_THROWS_AS(moore_ball_order(2, 1), hypothesis_error);
        CHECK_THROWS_AS(moore_ball_order(3, -1), hypothesis_error);
        CHECK_THROWS_AS(moore_edge_ball_order(3, 0), hypothesis_error);
        CHECK_THROWS_AS(BoundParams(3, 5, -1), hypothesis_error);
    }

    TEST_CASE("ball orders") {
        CHECK(moore_ball_order(3, 0) == 1);
        CHECK(moore_ball_order(3, 1) == 4);
        CHECK(moore_ball_order(3, 2) == 10);
        CHECK(moore_ball_order(3, 3) == 22);
        CHECK(moore_ball_order(7, 2) == 50);
        CHECK(moore_edge_ball_order(3, 1) == 2);
        CHECK(moore_edge_ball_order(3, 2) == 6);
        CHECK(moore_edge_ball_order(3, 3) == 14);
        CHECK(moore_edge_ball_order(3, 4) == 30);
    }

    TEST_CASE("vertex ball of odd-girth bound and edge ball of even-girth bound") {
        for (int k = 3; k <= 9; ++k) {
            for (int s = 2; s <= 6; ++s) {
                CHECK(moore_ball_order(k, s) == moore_cage_bound(k, 2 * s + 1));
                CHECK(moore_edge_ball_order(k, s) == moore_cage_bound(k, 2 * s));
            }
        }
    }

    TEST_CASE("degree-diameter bound matches the odd-girth bound") {
        CHECK(moore_dd_bound(3, 1) == 4);
        CHECK(moore_dd_bound(3, 2) == 10);
        CHECK(moore_dd_bound(7, 2) == 50);
        CHECK(moore_dd_bound(57, 2) == 3250);
        for (int delta = 3; delta <= 8; ++delta)
            for (int d = 1; d <= 6; ++d)
                CHECK(moore_dd_bound(delta, d) == moore_cage_bound(delta, 2 * d + 1));
    }

    TEST_CASE("excess of catalog graphs") {
        CHECK(excess(petersen(), 3, 5) == 0);
        CHECK(excess(heawood(), 3, 6) == 0);
        CHECK(excess(mcgee(), 3, 7) == 2);
        CHECK(excess(tutte_coxeter(), 3, 8) == 0);
        CHECK(excess(hoffman_singleton(), 7, 5) == 0);
    }

    TEST_CASE("excess validates the stated parameters") {
        CHECK_THROWS_AS(excess(petersen(), 4, 5), hypothesis_error);
        CHECK_THROWS_AS(excess(petersen(), 3, 6), hypothesis_error);
        CHECK_THROWS_AS(excess(complete_bipartite(3, 4), 3, 4), hypothesis_error);
    }
}

TEST_SUITE("moore_trees") {
    TEST_CASE("petersen vertex trees have the full ball sizes") {
        Graph g = petersen();
        for (int root = 0; root < 10; ++root) {
            CHECK(moore_tree_vertex(g, root, 0).vertex_set.count() == 1);
            CHECK(moore_tree_vertex(g, root, 1).vertex_set.count() == 4);
            CHECK(moore_tree_vertex(g, root, 2).vertex_set.count() == 10);
        }
        auto t = moore_tree_vertex(g, 0, 2);
        CHECK(t.depth == 2);
        CHECK(std::get<int>(t.root) == 0);
        CHECK(t.parent[0] == -1);
        for (int v = 1; v < 10; ++v) {
            CHECK(t.parent[v] >= 0);
            CHECK(g.has_edge(v, t.parent[v]));
        }
    }

    TEST_CASE("heawood edge trees have the full tree sizes") {
        Graph g = heawood();
        for (const auto& e : g.edges()) {
            CHECK(moore_tree_edge(g, e, 1).vertex_set.count() == 2);
            CHECK(moore_tree_edge(g, e, 2).vertex_set.count() == 6);
            CHECK(moore_tree_edge(g, e, 3).vertex_set.count() == 14);
        }
        auto t = moore_tree_edge(g, g.edges()[0], 3);
        CHECK(std::get<Edge>(t.root) == g.edges()[0]);
        CHECK(t.vertex_set.count() == 14);
    }

    TEST_CASE("depth beyond the girth guarantee fails loudly") {
        CHECK_THROWS_AS(moore_tree_vertex(petersen(), 0, 3), hypothesis_error);
        CHECK_THROWS_AS(moore_tree_edge(heawood(), {0, 1}, 4), hypothesis_error);
        CHECK_THROWS_AS(moore_tree_edge(petersen(), {0, 1}, 0), hypothesis_error);
        CHECK_THROWS_AS(moore_tree_edge(petersen(), {0, 2}, 1), hypothesis_error);
        CHECK_THROWS_AS(moore_tree_vertex(complete_bipartite(3, 4), 0, 1), hypothesis_error);
    }

    TEST_CASE("k4 and tutte-coxeter tree sizes") {
        CHECK(moore_tree_vertex(complete_graph(4), 0, 1).vertex_set.count() == 4);
        Graph tc = tutte_coxeter();
        CHECK(moore_tree_edge(tc, tc.edges()[0], 4).vertex_set.count() == 30);
    }
}

TEST_SUITE("beta") {
    TEST_CASE("frozen values") {
        CHECK(beta_odd(BoundParams(3, 5), 10) == Rational(4, 10));
        CHECK(beta_odd(BoundParams(3, 7), 24) == Rational(10, 24));
        CHECK(beta_odd(BoundParams(7, 5), 50) == Rational(8, 50));
        CHECK(beta_even(BoundParams(3, 6), 14) == Rational(9, 21));
        CHECK(beta_even(BoundParams(3, 8), 30) == Rational(21, 45));
        CHECK(beta_even(BoundParams(3, 4), 6) == Rational(3, 9));
    }

    TEST_CASE("edge-rooted form equals the halved-edge-count form") {
        for (int k = 3; k <= 7; ++k) {
            for (int g = 4; g <= 10; g += 2) {
                BigInt n = moore_cage_bound(k, g) + (k % 2 == 0 ? 2 : 0);
                BigInt m = BigInt(k) * n / 2;
                Rational direct(moore_cage_bound(k, g - 1) - 1, m);
                CHECK(beta_even(BoundParams(k, g), n) == direct);
            }
        }
    }

    TEST_CASE("parity and range are enforced") {
        CHECK_THROWS_AS(beta_odd(BoundParams(3, 6), 14), hypothesis_error);
        CHECK_THROWS_AS(beta_even(BoundParams(3, 5), 10), hypothesis_error);
        CHECK_THROWS_AS(beta_odd(BoundParams(3, 3), 4), hypothesis_error);
        CHECK_THROWS_AS(beta_odd(BoundParams(3, 5), 9), hypothesis_error);
        CHECK_THROWS_AS(beta_even(BoundParams(3, 6), 13), hypothesis_error);
    }

    TEST_CASE("beta never exceeds 1 on feasible orders") {
        for (int k = 3; k <= 6; ++k) {
            for (int extra = 0; extra <= 40; ++extra) {
                BigInt n_odd = moore_cage_bound(k, 5) + extra;
                Rational b = beta_odd(BoundParams(k, 5), n_odd);
                CHECK(b > 0);
                CHECK(b <= 1);
            }
        }
    }
}
