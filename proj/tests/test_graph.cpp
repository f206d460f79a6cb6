#include "doctest.h"

#include <set>

#include "stabring/graph.hpp"
#include "test_graphs.hpp"

using namespace stabring;

TEST_CASE("edge list parsing") {
    auto r = parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(r.graph.n == 5);
    CHECK(r.graph.m() == 5);
    CHECK(r.graph == cycle_graph(5));
    CHECK(r.warnings.empty());

    auto single = parse_graph("1 0\n");
    CHECK(single.graph.n == 1);
    CHECK(single.graph.m() == 0);

    auto bridge = parse_graph("6 7\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3\n");
    CHECK(bridge.graph == testing::two_triangles_bridge());

    SUBCASE("comments and whitespace") {
        auto c = parse_graph("# a triangle\n3 3\n0 1  # first\n1 2\n0 2\n");
        CHECK(c.graph == complete_graph(3));
    }
    SUBCASE("duplicate edge warns and dedupes") {
        auto d = parse_graph("3 3\n0 1\n1 0\n1 2\n");
        CHECK(d.graph.m() == 2);
        REQUIRE(d.warnings.size() == 1);
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), parse_error);      // loop
        CHECK_THROWS_AS(parse_graph("2 1\n0 5\n"), parse_error);      // out of range
        CHECK_THROWS_AS(parse_graph("0 0\n"), parse_error);           // empty graph
        CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), parse_error);      // truncated
        CHECK_THROWS_AS(parse_graph("3 1\n0 1\n2\n"), parse_error);   // trailing tokens
    }
}

TEST_CASE("json parsing and round trips") {
    auto r = parse_graph(R"({"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[4,0]]})");
    CHECK(r.graph == cycle_graph(5));
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,0]]})"), parse_error);
    CHECK_THROWS_AS(parse_graph(R"({"n": 2})"), parse_error);
    CHECK_THROWS_AS(parse_graph("{ not json"), parse_error);

    for (const Graph& g : {cycle_graph(5), complete_graph(4), testing::two_triangles_bridge(),
                           disjoint_union(complete_graph(1), complete_graph(2))}) {
        Graph via_text = parse_graph(to_edge_list(g)).graph;
        Graph via_json = parse_graph(to_json_text(g)).graph;
        CHECK(via_text == g);
        CHECK(via_json == g);
        CHECK(to_edge_list(via_text) == to_edge_list(g));
        CHECK(to_json_text(via_json) == to_json_text(g));
    }
}

TEST_CASE("maximal cliques") {
    auto c5 = maximal_cliques(cycle_graph(5));
    CHECK(c5.members == std::vector<std::vector<int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});

    auto bridge = maximal_cliques(testing::two_triangles_bridge());
    CHECK(bridge.members == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3}, {3, 4, 5}});

    auto k4 = maximal_cliques(complete_graph(4));
    CHECK(k4.members == std::vector<std::vector<int>>{{0, 1, 2, 3}});

    SUBCASE("antichain and coverage, small corpus") {
        for (const Graph& g : {cycle_graph(7), testing::wheel5(), path_graph(4),
                               disjoint_union(complete_graph(3), cycle_graph(5))}) {
            auto f = maximal_cliques(g);
            std::set<int> covered;
            for (const auto& a : f.members) {
                for (size_t i = 0; i + 1 < a.size(); ++i)
                    for (size_t j = i + 1; j < a.size(); ++j)
                        CHECK(g.adjacent(a[i], a[j]));
                covered.insert(a.begin(), a.end());
            }
            CHECK((int)covered.size() == g.n);
            for (const auto& a : f.members)
                for (const auto& b : f.members) {
                    if (&a == &b) continue;
                    CHECK(!std::includes(a.begin(), a.end(), b.begin(), b.end()));
                }
        }
    }
}

TEST_CASE("maximal size-<=3 cliques") {
    auto k4 = k_maximal_elements(complete_graph(4));
    CHECK(k4.members ==
          std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});

    auto c5 = k_maximal_elements(cycle_graph(5));
    CHECK(c5.members == maximal_cliques(cycle_graph(5)).members);

    auto k1k2 = k_maximal_elements(disjoint_union(complete_graph(1), complete_graph(2)));
    CHECK(k1k2.members == std::vector<std::vector<int>>{{0}, {1, 2}});
}

namespace {

// all-subsets reference: a vertex set is a hole iff it induces a connected
// 2-regular subgraph, odd, size >= 5
std::set<std::vector<int>> holes_by_brute_force(const Graph& g) {
    std::set<std::vector<int>> out;
    for (uint64_t mask = 0; mask < (1ull << g.n); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size < 5 || size % 2 == 0) continue;
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1) verts.push_back(v);
        Graph sub = induced_subgraph(g, verts);
        bool two_regular = true;
        for (int v = 0; v < sub.n; ++v) two_regular = two_regular && sub.degree(v) == 2;
        if (!two_regular) continue;
        if (components(sub).components.size() != 1) continue;
        out.insert(verts);
    }
    return out;
}

}  // namespace

TEST_CASE("odd holes") {
    auto c5 = odd_holes(cycle_graph(5));
    REQUIRE(c5.holes.size() == 1);
    CHECK(c5.holes[0] == std::vector<int>{0, 1, 2, 3, 4});

    auto c7 = odd_holes(cycle_graph(7));
    REQUIRE(c7.holes.size() == 1);
    CHECK(c7.holes[0].size() == 7);

    CHECK(odd_holes(complete_graph(4)).holes.empty());
    CHECK(odd_holes(testing::two_triangles_bridge()).holes.empty());

    SUBCASE("max length cap") {
        CHECK(odd_holes(cycle_graph(7), 5).holes.empty());
        CHECK(odd_holes(cycle_graph(7), 7).holes.size() == 1);
    }

    SUBCASE("each reported hole is a chordless odd cycle") {
        for (const Graph& g : {testing::wheel5(), cycle_graph(9),
                               disjoint_union(cycle_graph(5), cycle_graph(7))}) {
            for (const auto& h : odd_holes(g).holes) {
                CHECK(h.size() % 2 == 1);
                CHECK(h.size() >= 5);
                int len = (int)h.size();
                for (int i = 0; i < len; ++i)
                    for (int j = i + 1; j < len; ++j) {
                        bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
                        CHECK(g.adjacent(h[i], h[j]) == consecutive);
                    }
            }
        }
    }

    SUBCASE("agreement with all-subsets search") {
        std::vector<Graph> gs = {cycle_graph(5), cycle_graph(7), cycle_graph(9),
                                 testing::wheel5(), testing::two_triangles_bridge(),
                                 complement(cycle_graph(7)),
                                 disjoint_union(cycle_graph(5), complete_graph(3))};
        for (const Graph& g : gs) {
            std::set<std::vector<int>> got;
            for (auto h : odd_holes(g).holes) {
                std::sort(h.begin(), h.end());
                got.insert(h);
            }
            CHECK(got == holes_by_brute_force(g));
        }
    }
}

TEST_CASE("components and the clique-number spectrum") {
    Graph k1k2 = disjoint_union(complete_graph(1), complete_graph(2));
    auto cs = components(k1k2);
    CHECK(cs.components.size() == 2);
    CHECK(cs.I == std::vector<int>{1, 2});
    CHECK(cs.u() == 2);

    auto bridge = components(testing::two_triangles_bridge());
    CHECK(bridge.components.size() == 1);
    CHECK(bridge.I == std::vector<int>{3});
    CHECK(bridge.u() == 1);

    auto c5c5 = components(disjoint_union(cycle_graph(5), cycle_graph(5)));
    CHECK(c5c5.components.size() == 2);
    CHECK(c5c5.I == std::vector<int>{2});

    SUBCASE("adjacency never crosses component boundaries") {
        Graph g = disjoint_union(disjoint_union(cycle_graph(5), complete_graph(3)),
                                 path_graph(3));
        auto sp = components(g);
        for (size_t a = 0; a < sp.components.size(); ++a)
            for (size_t b = a + 1; b < sp.components.size(); ++b)
                for (int u : sp.components[a])
                    for (int v : sp.components[b]) CHECK(!g.adjacent(u, v));
    }

    SUBCASE("primed class identities") {
        // V'_1 = V_1, V'_2 = V_2, V'_3 = union of V_d for d >= 3
        Graph g = disjoint_union(
            disjoint_union(complete_graph(1), complete_graph(2)),
            disjoint_union(complete_graph(3), complete_graph(4)));
        auto sp = components(g);
        CHECK(sp.V_class_prime.at(1) == sp.V_class.at(1));
        CHECK(sp.V_class_prime.at(2) == sp.V_class.at(2));
        std::vector<int> v3plus;
        for (auto& [d, verts] : sp.V_class)
            if (d >= 3) v3plus.insert(v3plus.end(), verts.begin(), verts.end());
        std::sort(v3plus.begin(), v3plus.end());
        CHECK(sp.V_class_prime.at(3) == v3plus);
        CHECK(sp.I_prime == std::vector<int>{1, 2, 3});
    }

    SUBCASE("class subgraphs") {
        Graph g = disjoint_union(complete_graph(3), testing::two_triangles_bridge());
        auto sp = components(g);
        CHECK(sp.I == std::vector<int>{3});
        Graph g3 = class_subgraph(g, sp, 3);
        CHECK(g3.n == 9);
        CHECK_THROWS(class_subgraph(g, sp, 2));
    }
}

TEST_CASE("purity") {
    CHECK_FALSE(is_pure(testing::two_triangles_bridge()));
    CHECK(is_pure(cycle_graph(5)));
    CHECK(is_t_pure(cycle_graph(5)));
    CHECK(is_pure(complete_graph(4)));
    CHECK(is_t_pure(complete_graph(4)));
    CHECK(is_pure(make_graph(3, {})));  // edgeless graphs are pure
    CHECK_FALSE(is_pure(disjoint_union(complete_graph(1), complete_graph(2))));
    CHECK_FALSE(is_t_pure(testing::two_triangles_bridge()));
}

TEST_CASE("perfectness at desk scale") {
    CHECK(is_perfect(cycle_graph(5)) == Decision::False);
    CHECK(is_perfect(cycle_graph(6)) == Decision::True);
    CHECK(is_perfect(complete_graph(4)) == Decision::True);
    CHECK(is_perfect(testing::two_triangles_bridge()) == Decision::True);
    CHECK(is_perfect(complement(cycle_graph(7))) == Decision::False);  // odd antihole
    CHECK(is_perfect(cycle_graph(17)) == Decision::Undecided);         // guard
    CHECK(is_perfect(cycle_graph(17), 20) == Decision::False);
}

TEST_CASE("plus_sum") {
    std::vector<long long> ones(5, 1);
    CHECK(plus_sum(ones, {0, 1, 2, 3, 4}) == 5);
    CHECK(plus_sum(ones, {}) == 0);
    std::vector<long long> xi{2, 1, 1};
    CHECK(plus_sum(xi, {0, 2}) == 3);
}

TEST_CASE("stable sets and bipartiteness") {
    CHECK(stable_sets(cycle_graph(5)).size() == 11);
    CHECK(stable_sets(complete_graph(4)).size() == 5);
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(make_graph(2, {})));
}

TEST_CASE("class purity is componentwise purity") {
    std::vector<Graph> gs = {disjoint_union(complete_graph(3), testing::two_triangles_bridge()),
                             disjoint_union(cycle_graph(5), complete_graph(2)),
                             disjoint_union(disjoint_union(complete_graph(1), complete_graph(2)),
                                            complete_graph(4))};
    for (const Graph& g : gs) {
        auto sp = components(g);
        for (int d : sp.I) {
            bool class_pure = is_pure(class_subgraph(g, sp, d));
            bool all_pure = true;
            for (int c : sp.J.at(d))
                all_pure = all_pure && is_pure(induced_subgraph(g, sp.components[c]));
            CHECK(class_pure == all_pure);
        }
    }
}
