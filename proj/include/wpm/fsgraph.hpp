#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpm/instance.hpp"

namespace wpm {

enum class EdgeClass : std::uint8_t { E1, E2 };

// One edge per applicant, joining its f-item to its s-item. Parallel edges
// are distinct objects (two applicants may share the same item pair).
struct FsEdge {
    int id;
    EdgeClass cls;
    int applicant;  // index within its own category
    int a;          // f-item endpoint
    int b;          // s-item endpoint
};

struct FsVertex {
    int item;
    bool in_f1 = false, in_s1 = false, in_f2 = false, in_s2 = false;
};

enum class ComponentClass { Tree, Unicyclic, Multicyclic };

struct Component {
    std::vector<int> vertices;  // vertex indices, ascending item id
    std::vector<int> edges;     // edge ids, ascending
    ComponentClass cls;
    int min_item;
};

// The fs-relation multigraph of a reduced instance: vertices are the items
// appearing in F1 u S1 u F2 u S2, edges are the applicants.
class FsGraph {
  public:
    // Throws InvalidParams when validate(reduced) reports violations.
    static FsGraph build(const ReducedInstance& reduced);

    int order() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int n1() const { return n1_; }

    const std::vector<FsVertex>& vertices() const { return vertices_; }
    const std::vector<FsEdge>& edges() const { return edges_; }
    const std::vector<Component>& components() const { return components_; }

    // Vertex index of an item id, or -1 when the item appears in no list.
    int vertex_of(int item) const {
        if (item < 0 || item >= static_cast<int>(item_to_vertex_.size())) return -1;
        return item_to_vertex_[item];
    }

    // Incident edge ids per vertex index, ascending.
    const std::vector<int>& incident(int vertex) const { return adjacency_[vertex]; }

    // The endpoint of `e` opposite to item id `item`.
    int other_end(const FsEdge& e, int item) const { return e.a == item ? e.b : e.a; }

  private:
    int n1_ = 0;
    std::vector<FsVertex> vertices_;
    std::vector<FsEdge> edges_;
    std::vector<int> item_to_vertex_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Component> components_;
};

// Independent-cycle census. Unicyclic components contribute an exact length
// (degree-1 pruning leaves the cycle); multicyclic components contribute
// their cycle-space rank as unresolved entries.
struct CycleCensus {
    std::vector<int> lengths;  // resolved, in component order
    int unresolved = 0;

    bool has_cycle() const { return unresolved > 0 || !lengths.empty(); }
    int total() const { return static_cast<int>(lengths.size()) + unresolved; }
};

CycleCensus cycle_census(const FsGraph& g);

// DOT text for debugging; vertex labels carry the role flags, edge labels
// the class and applicant index.
std::string to_dot(const FsGraph& g);

}  // namespace wpm
