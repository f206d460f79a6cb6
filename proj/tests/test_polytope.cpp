#include "doctest.h"

#include <algorithm>
#include <random>

#include "stabring/polytope.hpp"
#include "test_graphs.hpp"

using namespace stabring;

namespace {

int count_tag(const RationalPolytope& p, Provenance tag) {
    int c = 0;
    for (const auto& q : p.ineqs) c += q.tag == tag;
    return c;
}

std::vector<Rat> characteristic(uint64_t mask, int n) {
    std::vector<Rat> x(n, Rat(0));
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) x[v] = Rat(1);
    return x;
}

bool satisfies_all(const RationalPolytope& p, const std::vector<Rat>& x) {
    for (const auto& q : p.ineqs) {
        Rat lhs(0);
        for (int i = 0; i < p.dim; ++i) lhs += q.a[i] * x[i];
        if (lhs > q.b) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(1, 2) * Rat(2, 5) == Rat(1, 5));
    CHECK(Rat(1) / Rat(5) == Rat(1, 5));
    CHECK(Rat(7, 3).str() == "7/3");
    CHECK(Rat(-4, 2).str() == "-2");
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS(Rat(1, 0));
    CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("polytope construction") {
    auto k1 = build_polytope(complete_graph(1), Variant::HSTAB);
    CHECK(k1.ineqs.size() == 2);  // x >= 0 and the singleton clique x <= 1

    auto c5h = build_polytope(cycle_graph(5), Variant::HSTAB);
    CHECK(count_tag(c5h, Provenance::NonNeg) == 5);
    CHECK(count_tag(c5h, Provenance::Clique) == 5);
    CHECK(count_tag(c5h, Provenance::OddHole) == 1);
    CHECK(c5h.ineqs.size() == 11);

    auto c5q = build_polytope(cycle_graph(5), Variant::QSTAB);
    CHECK(count_tag(c5q, Provenance::OddHole) == 0);
    CHECK(c5q.ineqs.size() == 10);

    auto c5t = build_polytope(cycle_graph(5), Variant::TSTAB);
    CHECK(count_tag(c5t, Provenance::UpperBound) == 5);
    CHECK(count_tag(c5t, Provenance::KElement) == 5);
    CHECK(count_tag(c5t, Provenance::OddHole) == 1);

    // triangles enter the TSTAB system through the size-<=3 clique family
    auto k3t = build_polytope(complete_graph(3), Variant::TSTAB);
    CHECK(count_tag(k3t, Provenance::KElement) == 1);
    std::vector<Rat> half(3, Rat(1, 2));
    CHECK_FALSE(satisfies_all(k3t, half));
}

TEST_CASE("vertex enumeration") {
    auto k1 = enumerate_vertices(build_polytope(complete_graph(1), Variant::HSTAB));
    REQUIRE(k1.points.size() == 2);
    CHECK(k1.points[0] == std::vector<Rat>{Rat(0)});
    CHECK(k1.points[1] == std::vector<Rat>{Rat(1)});

    SUBCASE("QSTAB of the 5-cycle has the half-point") {
        auto vs = enumerate_vertices(build_polytope(cycle_graph(5), Variant::QSTAB));
        CHECK(vs.points.size() == 12);
        CHECK(vs.fractional_count() == 1);
        std::vector<Rat> half(5, Rat(1, 2));
        CHECK(std::count(vs.points.begin(), vs.points.end(), half) == 1);
    }

    SUBCASE("HSTAB of the 5-cycle is integral with the 11 stable sets") {
        auto vs = enumerate_vertices(build_polytope(cycle_graph(5), Variant::HSTAB));
        CHECK(vs.points.size() == 11);
        CHECK(vs.fractional_count() == 0);
        auto ss = stable_sets(cycle_graph(5));
        REQUIRE(ss.size() == 11);
        for (uint64_t s : ss)
            CHECK(std::count(vs.points.begin(), vs.points.end(), characteristic(s, 5)) == 1);
    }

    SUBCASE("idempotent and independent of inequality order") {
        auto p = build_polytope(testing::wheel5(), Variant::HSTAB);
        auto vs1 = enumerate_vertices(p);
        std::mt19937 rng(7);
        std::shuffle(p.ineqs.begin(), p.ineqs.end(), rng);
        auto vs2 = enumerate_vertices(p);
        CHECK(vs1.points == vs2.points);
        auto vs3 = enumerate_vertices(p);
        CHECK(vs2.points == vs3.points);
    }

    SUBCASE("desk-scale guard") {
        Graph big = complete_graph(13);
        CHECK_THROWS_AS(enumerate_vertices(build_polytope(big, Variant::HSTAB)),
                        desk_scale_error);
    }
}

TEST_CASE("h-perfect and t-perfect decisions") {
    CHECK(is_h_perfect(cycle_graph(5)) == Decision::True);
    CHECK(is_t_perfect(cycle_graph(5)) == Decision::True);
    CHECK(is_h_perfect(complete_graph(4)) == Decision::True);
    CHECK(is_h_perfect(cycle_graph(7)) == Decision::True);

    SUBCASE("the 5-wheel misses by exactly one fractional vertex") {
        CHECK(is_h_perfect(testing::wheel5()) == Decision::False);
        auto vs = enumerate_vertices(build_polytope(testing::wheel5(), Variant::HSTAB));
        REQUIRE(vs.fractional_count() == 1);
        std::vector<Rat> expect{Rat(2, 5), Rat(2, 5), Rat(2, 5), Rat(2, 5), Rat(2, 5), Rat(1, 5)};
        for (size_t i = 0; i < vs.points.size(); ++i)
            if (!vs.integral[i]) CHECK(vs.points[i] == expect);
    }

    SUBCASE("componentwise decision matches the direct one") {
        Graph g = disjoint_union(cycle_graph(5), complete_graph(3));
        CHECK(is_h_perfect(g) == Decision::True);
        Graph h = disjoint_union(testing::wheel5(), complete_graph(2));
        CHECK(is_h_perfect(h) == Decision::False);
    }

    SUBCASE("guard propagates as undecided") {
        CHECK(is_h_perfect(complete_graph(13)) == Decision::Undecided);
        CHECK(is_h_perfect(disjoint_union(complete_graph(13), complete_graph(1))) ==
              Decision::Undecided);
    }
}

TEST_CASE("every stable-set characteristic vector satisfies every built system") {
    std::vector<Graph> gs = {cycle_graph(5), cycle_graph(7), testing::wheel5(),
                             testing::two_triangles_bridge(), complete_graph(4),
                             disjoint_union(complete_graph(1), complete_graph(3))};
    for (const Graph& g : gs)
        for (Variant v : {Variant::HSTAB, Variant::QSTAB, Variant::TSTAB}) {
            auto p = build_polytope(g, v);
            for (uint64_t s : stable_sets(g)) CHECK(satisfies_all(p, characteristic(s, g.n)));
        }
}

TEST_CASE("strict interior") {
    auto k1 = build_polytope(complete_graph(1), Variant::HSTAB);
    CHECK(strict_interior(k1, std::vector<Rat>{Rat(1)}, 2));
    CHECK_FALSE(strict_interior(k1, std::vector<Rat>{Rat(0)}, 5));

    auto c5 = build_polytope(cycle_graph(5), Variant::HSTAB);
    std::vector<long long> ones(5, 1);
    CHECK(strict_interior(c5, ones, 3));
    CHECK_FALSE(strict_interior(c5, ones, 2));
}

TEST_CASE("exports") {
    auto p = build_polytope(complete_graph(2), Variant::QSTAB);
    auto text = export_hrep(p);
    CHECK(text.find("1 1 <= 1") != std::string::npos);
    auto vs = enumerate_vertices(build_polytope(cycle_graph(5), Variant::QSTAB));
    auto vtext = export_vertices(vs);
    CHECK(vtext.find("1/2 1/2 1/2 1/2 1/2") != std::string::npos);
    CHECK(vtext.find("# fractional") != std::string::npos);
}

TEST_CASE("the hole-cut system is the intersection of the other two") {
    // same vertex sets for the combined H-representation and the hole-cut one
    for (const Graph& g : {cycle_graph(5), cycle_graph(7), testing::wheel5(),
                           testing::two_triangles_bridge()}) {
        auto h = build_polytope(g, Variant::HSTAB);
        auto q = build_polytope(g, Variant::QSTAB);
        auto t = build_polytope(g, Variant::TSTAB);
        RationalPolytope meet;
        meet.dim = g.n;
        meet.ineqs = q.ineqs;
        meet.ineqs.insert(meet.ineqs.end(), t.ineqs.begin(), t.ineqs.end());
        CHECK(enumerate_vertices(h).points == enumerate_vertices(meet).points);
    }
}

TEST_CASE("vertex count equals the stable-set count exactly in the h-perfect case") {
    for (const Graph& g : {cycle_graph(5), cycle_graph(6), complete_graph(4),
                           testing::wheel5(), testing::two_triangles_bridge()}) {
        auto vs = enumerate_vertices(build_polytope(g, Variant::HSTAB));
        bool equal = vs.points.size() == stable_sets(g).size();
        CHECK(equal == (is_h_perfect(g) == Decision::True));
    }
}

TEST_CASE("complete graphs beyond the triangle are not t-perfect") {
    CHECK(is_t_perfect(complete_graph(3)) == Decision::True);
    CHECK(is_t_perfect(complete_graph(4)) == Decision::False);
    CHECK(is_t_perfect(testing::two_triangles_bridge()) == Decision::True);
}
