#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wpm/rng.hpp"
#include "wpm/wellformed.hpp"

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

const ReducedInstance kPath = make_reduced(3, {0}, {1}, {1}, {2});
const ReducedInstance kG1Prime = make_reduced(5, {0, 0}, {1, 2}, {1, 2}, {3, 4});

}  // namespace

TEST_CASE("the path instance has the forced orientation") {
    const FsGraph g = FsGraph::build(kPath);
    const auto o = solve_orientation(g);
    REQUIRE(o.has_value());
    // Vertex 1 is in F2, so the E1 edge cannot enter it; vertex 0 in F1
    // needs the E1 edge; vertex 1 then takes the E2 edge.
    CHECK(o->head[0] == 0);
    CHECK(o->head[1] == 1);

    const Matching mt = to_matching(*o, kPath);
    CHECK(mt.a1 == std::vector<int>{0});
    CHECK(mt.a2 == std::vector<int>{1});
    CHECK(verify_well_formed(mt, kPath).empty());
}

TEST_CASE("the minimal bad instance is infeasible with the expected G1 witness") {
    const FsGraph g = FsGraph::build(kG1Prime);
    CHECK(!solve_orientation(g).has_value());

    const auto w = find_witness(g);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::G1);
    CHECK(w->path_vertices == std::vector<int>{3, 1, 0, 2, 4});
    CHECK(validate_witness(*w, g));
}

TEST_CASE("multicyclic components are always infeasible and yield G3") {
    const ReducedInstance r = make_reduced(8, {0, 0, 0, 0}, {1, 1, 2, 2}, {3}, {4});
    const FsGraph g = FsGraph::build(r);
    CHECK(!solve_orientation(g).has_value());
    const auto w = find_witness(g);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::G3);
    CHECK(validate_witness(*w, g));
}

TEST_CASE("an unorientable 2-cycle yields the degenerate G2 witness") {
    // Parallel E1 edges whose shared s1-item is also an f2-item: both
    // rotations drive an E1 edge into it.
    const ReducedInstance r = make_reduced(4, {0, 0}, {1, 1}, {1}, {2});
    const FsGraph g = FsGraph::build(r);
    CHECK(!solve_orientation(g).has_value());
    const auto w = find_witness(g);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::G2);
    CHECK(w->path_vertices.empty());
    CHECK(w->cycle_vertices.size() == 2);
    CHECK(validate_witness(*w, g));
}

TEST_CASE("the degenerate 4-cycle from coincident s2 items yields G2") {
    // Both S1^F2 vertices sit on the cycle itself, so no off-cycle path
    // exists; the witness is the unorientable cycle alone.
    const ReducedInstance r = make_reduced(6, {0, 0}, {1, 2}, {1, 2}, {3, 3});
    const FsGraph g = FsGraph::build(r);
    CHECK(!solve_orientation(g).has_value());
    const auto w = find_witness(g);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::G2);
    CHECK(w->path_vertices.empty());
    CHECK(w->cycle_vertices.size() == 4);
    CHECK(validate_witness(*w, g));
}

TEST_CASE("a pincer hanging off a cycle yields the standard G2 witness") {
    // 2-cycle on {0,1}; pincer 2 attacks it through its E1 edge (0,2).
    const ReducedInstance r = make_reduced(5, {0, 0, 0}, {1, 1, 2}, {2}, {3});
    const FsGraph g = FsGraph::build(r);
    CHECK(!solve_orientation(g).has_value());
    const auto w = find_witness(g);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::G2);
    CHECK(w->path_vertices == std::vector<int>{3, 2, 0});
    CHECK(w->cycle_vertices.size() == 2);
    CHECK(validate_witness(*w, g));
}

TEST_CASE("witness validation rejects mangled patterns") {
    const FsGraph g = FsGraph::build(kG1Prime);
    Witness w = *find_witness(g);
    REQUIRE(validate_witness(w, g));

    SUBCASE("wrong class order") {
        // [E2,E1,E1,E2] is the valid sequence; swapping breaks it.
        std::swap(w.path_edges[1], w.path_edges[3]);
        CHECK(!validate_witness(w, g));
    }
    SUBCASE("a four-vertex G1 candidate is always rejected") {
        w.path_vertices = {3, 1, 0, 2};
        w.path_edges = {2, 0, 1};
        CHECK(!validate_witness(w, g));
    }
    SUBCASE("repeated vertices are rejected") {
        w.path_vertices = {3, 1, 0, 1, 3};
        w.path_edges = {2, 0, 0, 2};
        CHECK(!validate_witness(w, g));
    }
    SUBCASE("kind mismatch is rejected") {
        w.kind = WitnessKind::G3;
        CHECK(!validate_witness(w, g));
    }
    SUBCASE("empty cycle payloads are rejected") {
        CHECK(!validate_witness(Witness{WitnessKind::G2, {}, {}, {}, {}, {}, {}}, g));
        CHECK(!validate_witness(Witness{WitnessKind::G3, {}, {}, {}, {}, {}, {}}, g));
    }
}

TEST_CASE("to_matching rejects orientations violating the degree conditions") {
    const FsGraph g = FsGraph::build(kG1Prime);
    Orientation bad;
    bad.head = {0, 0, 1, 2};  // both E1 edges enter vertex 0
    CHECK_THROWS_AS(to_matching(bad, kG1Prime), InconsistentOrientation);

    Orientation not_endpoint;
    not_endpoint.head = {4, 2, 1, 2};
    CHECK_THROWS_AS(to_matching(not_endpoint, kG1Prime), InconsistentOrientation);

    Orientation wrong_size;
    wrong_size.head = {0};
    CHECK_THROWS_AS(to_matching(wrong_size, kG1Prime), InconsistentOrientation);
}

TEST_CASE("verify_well_formed reports the violated conditions") {
    // Everyone takes their s-item: f-items end up unserved.
    Matching all_second;
    all_second.a1 = {1};
    all_second.a2 = {2};
    const auto v = verify_well_formed(all_second, kPath);
    REQUIRE(!v.empty());
    bool mentions_f1 = false;
    for (const auto& viol : v) mentions_f1 |= viol.what.find("f1-item 0") != std::string::npos;
    CHECK(mentions_f1);

    Matching collision;
    collision.a1 = {0};
    collision.a2 = {1};
    CHECK(verify_well_formed(collision, kPath).empty());
    collision.a1 = {1};  // both applicants on item 1
    const auto v2 = verify_well_formed(collision, kPath);
    bool mentions_dup = false;
    for (const auto& viol : v2)
        mentions_dup |= viol.what.find("more than one applicant") != std::string::npos;
    CHECK(mentions_dup);
}

TEST_CASE("exists_2wpm follows the characterization and gates on weights") {
    ReducedInstance path = kPath;
    CHECK(exists_2wpm(path));
    ReducedInstance bad = kG1Prime;
    CHECK(!exists_2wpm(bad));

    path.weights = {3, 2};  // 3 < 2*2
    CHECK_THROWS_AS(exists_2wpm(path), WeightsNotDominant);
}

TEST_CASE("duality: feasibility and witnesses partition random instances") {
    std::uint64_t idx = 0;
    for (int n : {4, 8, 16}) {
        for (int m : {n + 1, 2 * n, 4 * n, n * n}) {
            for (int t = 0; t < 600; ++t) {
                const ReducedInstance r = gen_reduced(n / 2, n / 2, m, child_seed(31337, idx++));
                const FsGraph g = FsGraph::build(r);
                const bool feasible = solve_orientation(g).has_value();
                const auto w = find_witness(g);
                REQUIRE(feasible == !w.has_value());
                if (w) REQUIRE(validate_witness(*w, g));
            }
        }
    }
}

TEST_CASE("soundness: every feasible orientation induces a well-formed matching") {
    std::uint64_t idx = 0;
    int feasible_seen = 0;
    for (int t = 0; t < 4000; ++t) {
        const ReducedInstance r = gen_reduced(3, 3, 12 + t % 20, child_seed(4242, idx++));
        const FsGraph g = FsGraph::build(r);
        const auto o = solve_orientation(g);
        if (!o) continue;
        ++feasible_seen;
        const Matching mt = to_matching(*o, r);
        REQUIRE(verify_well_formed(mt, r).empty());

        // Forced-edge property: feasible orientations never point an E1
        // edge at an S1^F2 vertex, so those edges rest on their F1 end.
        for (const FsEdge& e : g.edges()) {
            if (e.cls != EdgeClass::E1) continue;
            const FsVertex& vb = g.vertices()[g.vertex_of(e.b)];
            if (vb.in_f2) REQUIRE(o->head[e.id] == e.a);
        }
    }
    CHECK(feasible_seen > 1000);
}

TEST_CASE("multicyclic components force infeasibility by pigeonhole") {
    std::uint64_t idx = 0;
    int multicyclic_seen = 0;
    for (int t = 0; t < 4000 && multicyclic_seen < 50; ++t) {
        const ReducedInstance r = gen_reduced(6, 6, 14, child_seed(5151, idx++));
        const FsGraph g = FsGraph::build(r);
        for (const Component& comp : g.components()) {
            if (comp.cls != ComponentClass::Multicyclic) continue;
            ++multicyclic_seen;
            CHECK(!solve_orientation(g).has_value());
            break;
        }
    }
    CHECK(multicyclic_seen >= 1);
}
