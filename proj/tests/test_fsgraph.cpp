#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wpm/fsgraph.hpp"
#include "wpm/rng.hpp"

using namespace wpm;

namespace {

ReducedInstance make_reduced(int m, std::vector<int> f1, std::vector<int> s1,
                             std::vector<int> f2, std::vector<int> s2) {
    ReducedInstance r;
    r.m = m;
    r.f1 = std::move(f1);
    r.s1 = std::move(s1);
    r.f2 = std::move(f2);
    r.s2 = std::move(s2);
    return r;
}

}  // namespace

TEST_CASE("the five-item example builds a single tree component") {
    const ReducedInstance r = make_reduced(5, {0, 0}, {1, 2}, {1, 2}, {3, 4});
    const FsGraph g = FsGraph::build(r);

    CHECK(g.order() == 5);
    REQUIRE(g.edge_count() == 4);
    CHECK(g.edges()[0].cls == EdgeClass::E1);
    CHECK(g.edges()[0].a == 0);
    CHECK(g.edges()[0].b == 1);
    CHECK(g.edges()[1].a == 0);
    CHECK(g.edges()[1].b == 2);
    CHECK(g.edges()[2].cls == EdgeClass::E2);
    CHECK(g.edges()[2].a == 1);
    CHECK(g.edges()[2].b == 3);
    CHECK(g.edges()[3].a == 2);
    CHECK(g.edges()[3].b == 4);

    REQUIRE(g.components().size() == 1);
    const Component& comp = g.components()[0];
    CHECK(comp.cls == ComponentClass::Tree);
    CHECK(comp.vertices.size() == 5);
    CHECK(comp.edges.size() == 4);

    // Vertex 1 is both an s1-item and an f2-item.
    const FsVertex& v1 = g.vertices()[g.vertex_of(1)];
    CHECK(v1.in_s1);
    CHECK(v1.in_f2);
    CHECK(!v1.in_f1);
    CHECK(!v1.in_s2);
}

TEST_CASE("duplicate (f,s) pairs become parallel edges forming a 2-cycle") {
    // Two A1 applicants share both items; the A2 applicant attaches elsewhere.
    const ReducedInstance r = make_reduced(6, {0, 0}, {1, 1}, {2}, {3});
    const FsGraph g = FsGraph::build(r);
    REQUIRE(g.components().size() == 2);
    CHECK(g.components()[0].cls == ComponentClass::Unicyclic);
    CHECK(g.components()[1].cls == ComponentClass::Tree);

    const CycleCensus census = cycle_census(g);
    CHECK(census.lengths == std::vector<int>{2});
    CHECK(census.unresolved == 0);
    CHECK(census.has_cycle());
}

TEST_CASE("the 3-item path example carries the expected classes and flags") {
    const ReducedInstance r = make_reduced(3, {0}, {1}, {1}, {2});
    const FsGraph g = FsGraph::build(r);
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0].cls == EdgeClass::E1);
    CHECK(g.edges()[1].cls == EdgeClass::E2);
    const FsVertex& mid = g.vertices()[g.vertex_of(1)];
    CHECK(mid.in_s1);
    CHECK(mid.in_f2);
    CHECK(cycle_census(g).total() == 0);
}

TEST_CASE("a 4-cycle from coincident s2 items is reported exactly") {
    const ReducedInstance r = make_reduced(6, {0, 0}, {1, 2}, {1, 2}, {3, 3});
    const FsGraph g = FsGraph::build(r);
    REQUIRE(g.components().size() == 1);
    CHECK(g.components()[0].cls == ComponentClass::Unicyclic);
    CHECK(cycle_census(g).lengths == std::vector<int>{4});
}

TEST_CASE("multicyclic components report unresolved cycle rank") {
    // Two parallel pairs sharing item 0: rank E - V + 1 = 2.
    const ReducedInstance r = make_reduced(8, {0, 0, 0, 0}, {1, 1, 2, 2}, {3}, {4});
    const FsGraph g = FsGraph::build(r);
    REQUIRE(g.components().size() == 2);
    CHECK(g.components()[0].cls == ComponentClass::Multicyclic);
    const CycleCensus census = cycle_census(g);
    CHECK(census.lengths.empty());
    CHECK(census.unresolved == 2);
    CHECK(census.has_cycle());
}

TEST_CASE("component sums and endpoint classes hold on random instances") {
    std::uint64_t seed = 0;
    for (int t = 0; t < 10000; ++t) {
        const int n1 = 1 + static_cast<int>(seed % 5);
        const int n2 = 1 + static_cast<int>((seed / 5) % 5);
        const int m = n1 + n2 + 1 + static_cast<int>(t % 13);
        const ReducedInstance r = gen_reduced(n1, n2, m, child_seed(777, seed++));
        const FsGraph g = FsGraph::build(r);

        std::size_t vertex_total = 0, edge_total = 0;
        for (const Component& comp : g.components()) {
            vertex_total += comp.vertices.size();
            edge_total += comp.edges.size();
        }
        REQUIRE(vertex_total == static_cast<std::size_t>(g.order()));
        REQUIRE(edge_total == static_cast<std::size_t>(r.n()));
        REQUIRE(g.order() <= r.m);

        for (const FsEdge& e : g.edges()) {
            REQUIRE(e.a != e.b);  // no self-loops
            const FsVertex& va = g.vertices()[g.vertex_of(e.a)];
            const FsVertex& vb = g.vertices()[g.vertex_of(e.b)];
            if (e.cls == EdgeClass::E1) {
                REQUIRE(va.in_f1);
                REQUIRE(vb.in_s1);
            } else {
                REQUIRE(va.in_f2);
                REQUIRE(vb.in_s2);
            }
        }

        // Constructional invariant: every F1 vertex carries an incident E1
        // edge, every F2 vertex an incident E2 edge.
        for (const FsVertex& v : g.vertices()) {
            bool has_e1 = false, has_e2 = false;
            for (int e : g.incident(g.vertex_of(v.item))) {
                has_e1 |= g.edges()[e].cls == EdgeClass::E1;
                has_e2 |= g.edges()[e].cls == EdgeClass::E2;
            }
            if (v.in_f1) REQUIRE(has_e1);
            if (v.in_f2) REQUIRE(has_e2);
        }
    }
}

TEST_CASE("build is deterministic") {
    const ReducedInstance r = gen_reduced(3, 3, 10, 99);
    const FsGraph a = FsGraph::build(r);
    const FsGraph b = FsGraph::build(r);
    CHECK(to_dot(a) == to_dot(b));
}

TEST_CASE("build rejects invalid instances") {
    ReducedInstance bad = make_reduced(4, {0}, {0}, {1}, {2});  // s1 in F1
    CHECK_THROWS_AS(FsGraph::build(bad), InvalidParams);
}

TEST_CASE("dot export labels vertices with roles and edges with classes") {
    const ReducedInstance r = make_reduced(3, {0}, {1}, {1}, {2});
    const std::string dot = to_dot(FsGraph::build(r));
    CHECK(dot.find("graph fs {") != std::string::npos);
    CHECK(dot.find("i1 [label=\"1 S1|F2\"]") != std::string::npos);
    CHECK(dot.find("i0 -- i1 [label=\"E1 x0\"]") != std::string::npos);
    CHECK(dot.find("i1 -- i2 [label=\"E2 y0\"]") != std::string::npos);
}
