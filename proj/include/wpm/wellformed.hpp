#pragma once

#include <optional>
#include <vector>

#include "wpm/fsgraph.hpp"

namespace wpm {

// head[edge id] = the item the edge points at. A valid orientation gives
// every vertex at most one incoming edge, every F1 vertex exactly one
// incoming E1 edge, and every F2 vertex exactly one incoming E2 edge.
struct Orientation {
    std::vector<int> head;
};

// assign per applicant; A1 applicants first, then A2.
struct Matching {
    std::vector<int> a1;
    std::vector<int> a2;
};

enum class WitnessKind { G1, G2, G3 };

const char* witness_kind_name(WitnessKind k);

// A forbidden-pattern certificate of infeasibility.
//
// G1: path_* holds the full pincer path v1..vk (k >= 5).
// G2: cycle_* holds a cycle; path_* holds the attacking path v1..vk meeting
//     the cycle only at vk, or is empty in the degenerate case where the
//     cycle itself admits no rotation (both directions drive an E1 edge
//     into an S1^F2 vertex).
// G3: cycle_* and cycle2_* hold two distinct cycles, path_* a connector
//     (possibly empty).
struct Witness {
    WitnessKind kind;
    std::vector<int> path_vertices;  // item ids
    std::vector<int> path_edges;     // edge ids
    std::vector<int> cycle_vertices;
    std::vector<int> cycle_edges;
    std::vector<int> cycle2_vertices;
    std::vector<int> cycle2_edges;

    // Flattened views, first occurrence order.
    std::vector<int> all_vertices() const;
    std::vector<int> all_edges() const;
};

// Decides existence of a valid orientation and constructs one when it
// exists. Reduction to feasible flow with lower bounds: every edge must
// send one unit to an endpoint (never an E1 edge into an F2 vertex), every
// vertex accepts at most one unit, every F1/F2 vertex exactly one.
std::optional<Orientation> solve_orientation(const FsGraph& g);

// Matching induced by an orientation: each applicant takes its edge's head.
// Throws InconsistentOrientation when the orientation violates any of the
// three conditions for this graph.
Matching to_matching(const Orientation& o, const ReducedInstance& reduced);

// Checks the four well-formedness conditions plus injectivity.
std::vector<Violation> verify_well_formed(const Matching& matching,
                                          const ReducedInstance& reduced);

// Structural certificate search, independent of the flow solver. Returns a
// witness iff some component is infeasible: multicyclic components yield
// G3, unicyclic ones G2, trees G1. Deterministic: components are scanned
// by smallest contained item, candidates by (vertex id, edge id).
std::optional<Witness> find_witness(const FsGraph& g);

bool validate_witness(const Witness& w, const FsGraph& g);

// Corollary of the characterization; requires dominant weights (w1 >= 2*w2)
// and throws WeightsNotDominant otherwise.
bool exists_2wpm(const ReducedInstance& reduced);

}  // namespace wpm
