#include "wpm/wellformed.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <unordered_set>

namespace wpm {

namespace {

// Compact Dinic; arc order is fixed by insertion, so results are
// deterministic for a deterministic build order.
class Dinic {
  public:
    explicit Dinic(int n) : adj_(n) {}

    int add_arc(int u, int v, int cap) {
        const int id = static_cast<int>(arcs_.size());
        arcs_.push_back({v, cap});
        adj_[u].push_back(id);
        arcs_.push_back({u, 0});
        adj_[v].push_back(id + 1);
        return id;
    }

    int residual(int arc) const { return arcs_[arc].cap; }

    long long max_flow(int s, int t) {
        long long total = 0;
        while (bfs(s, t)) {
            iter_.assign(adj_.size(), 0);
            while (int pushed = dfs(s, t, INT_MAX)) total += pushed;
        }
        return total;
    }

  private:
    struct Arc {
        int to;
        int cap;
    };

    bool bfs(int s, int t) {
        level_.assign(adj_.size(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int id : adj_[u]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[u] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    int dfs(int u, int t, int limit) {
        if (u == t) return limit;
        for (int& i = iter_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
            const int id = adj_[u][i];
            Arc& a = arcs_[id];
            if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
                const int pushed = dfs(a.to, t, std::min(limit, a.cap));
                if (pushed > 0) {
                    a.cap -= pushed;
                    arcs_[id ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_, iter_;
};

bool is_pincer_vertex(const FsVertex& v) { return v.in_s1 && v.in_f2; }

}  // namespace

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::G1: return "G1";
        case WitnessKind::G2: return "G2";
        case WitnessKind::G3: return "G3";
    }
    return "?";
}

std::vector<int> Witness::all_vertices() const {
    std::vector<int> out;
    std::unordered_set<int> seen;
    for (const auto* part : {&path_vertices, &cycle_vertices, &cycle2_vertices})
        for (int v : *part)
            if (seen.insert(v).second) out.push_back(v);
    return out;
}

std::vector<int> Witness::all_edges() const {
    std::vector<int> out;
    std::unordered_set<int> seen;
    for (const auto* part : {&path_edges, &cycle_edges, &cycle2_edges})
        for (int e : *part)
            if (seen.insert(e).second) out.push_back(e);
    return out;
}

std::optional<Orientation> solve_orientation(const FsGraph& g) {
    const int E = g.edge_count();
    const int V = g.order();
    // Node layout: super source/sink for the lower-bound transform, then the
    // circulation endpoints, then one node per edge and per vertex.
    const int SRC = 0, SNK = 1, CS = 2, CT = 3;
    auto enode = [&](int e) { return 4 + e; };
    auto vnode = [&](int v) { return 4 + E + v; };
    Dinic flow(4 + E + V);

    flow.add_arc(CT, CS, E + V + 1);

    // Each edge must emit exactly one unit: lower bound 1 becomes a unit of
    // supply at the edge node and demand at CS.
    std::vector<std::pair<int, int>> head_arcs(E, {-1, -1});  // arc id per endpoint a, b
    for (int e = 0; e < E; ++e) {
        const FsEdge& edge = g.edges()[e];
        flow.add_arc(SRC, enode(e), 1);
        const int va = g.vertex_of(edge.a);
        const int vb = g.vertex_of(edge.b);
        // An E1 edge may not be absorbed by an F2 vertex. Only the s1-side
        // endpoint can lie in F2 (F1 and F2 are disjoint).
        if (!(edge.cls == EdgeClass::E1 && g.vertices()[va].in_f2))
            head_arcs[e].first = flow.add_arc(enode(e), vnode(va), 1);
        if (!(edge.cls == EdgeClass::E1 && g.vertices()[vb].in_f2))
            head_arcs[e].second = flow.add_arc(enode(e), vnode(vb), 1);
    }
    flow.add_arc(CS, SNK, E);

    long long demand_total = 0;
    for (int v = 0; v < V; ++v) {
        const FsVertex& vert = g.vertices()[v];
        const bool demanded = vert.in_f1 || vert.in_f2;
        if (demanded) {
            flow.add_arc(vnode(v), SNK, 1);
            ++demand_total;
        } else {
            flow.add_arc(vnode(v), CT, 1);
        }
    }
    flow.add_arc(SRC, CT, static_cast<int>(demand_total));

    if (flow.max_flow(SRC, SNK) != E + demand_total) return std::nullopt;

    Orientation o;
    o.head.resize(E);
    for (int e = 0; e < E; ++e) {
        const FsEdge& edge = g.edges()[e];
        const auto [arc_a, arc_b] = head_arcs[e];
        if (arc_a >= 0 && flow.residual(arc_a) == 0)
            o.head[e] = edge.a;
        else if (arc_b >= 0 && flow.residual(arc_b) == 0)
            o.head[e] = edge.b;
        else
            return std::nullopt;  // unreachable when the flow saturated
    }
    return o;
}

Matching to_matching(const Orientation& o, const ReducedInstance& reduced) {
    const FsGraph g = FsGraph::build(reduced);
    const int E = g.edge_count();
    if (static_cast<int>(o.head.size()) != E)
        throw InconsistentOrientation("orientation has wrong edge count");

    std::vector<int> indegree(reduced.m, 0);
    for (int e = 0; e < E; ++e) {
        const FsEdge& edge = g.edges()[e];
        if (o.head[e] != edge.a && o.head[e] != edge.b)
            throw InconsistentOrientation("head of edge " + std::to_string(e) +
                                          " is not one of its endpoints");
        ++indegree[o.head[e]];
    }
    for (const FsVertex& v : g.vertices()) {
        if (indegree[v.item] > 1)
            throw InconsistentOrientation("item " + std::to_string(v.item) +
                                          " has more than one incoming edge");
        if ((v.in_f1 || v.in_f2) && indegree[v.item] != 1)
            throw InconsistentOrientation("f-item " + std::to_string(v.item) +
                                          " has no incoming edge");
    }
    for (int e = 0; e < E; ++e) {
        const FsEdge& edge = g.edges()[e];
        const int hv = g.vertex_of(o.head[e]);
        if (edge.cls == EdgeClass::E1 && g.vertices()[hv].in_f2)
            throw InconsistentOrientation("E1 edge " + std::to_string(e) +
                                          " points into an F2 item");
    }

    Matching mt;
    mt.a1.resize(reduced.n1());
    mt.a2.resize(reduced.n2());
    for (int e = 0; e < E; ++e) {
        const FsEdge& edge = g.edges()[e];
        if (edge.cls == EdgeClass::E1)
            mt.a1[edge.applicant] = o.head[e];
        else
            mt.a2[edge.applicant] = o.head[e];
    }
    return mt;
}

std::vector<Violation> verify_well_formed(const Matching& matching,
                                          const ReducedInstance& reduced) {
    std::vector<Violation> out;
    auto add = [&](std::string msg) { out.push_back({std::move(msg)}); };

    if (static_cast<int>(matching.a1.size()) != reduced.n1() ||
        static_cast<int>(matching.a2.size()) != reduced.n2()) {
        add("matching size does not match the instance");
        return out;
    }

    std::vector<int> owners(reduced.m, 0);
    auto claim = [&](int item) {
        if (item < 0 || item >= reduced.m) {
            add("assigned item " + std::to_string(item) + " out of range");
            return;
        }
        if (++owners[item] > 1)
            add("item " + std::to_string(item) + " assigned to more than one applicant");
    };

    for (int x = 0; x < reduced.n1(); ++x) {
        const int item = matching.a1[x];
        claim(item);
        if (item != reduced.f1[x] && item != reduced.s1[x])
            add("A1 applicant " + std::to_string(x) + " is matched to " + std::to_string(item) +
                ", neither its f1-item nor its s1-item");
    }
    for (int y = 0; y < reduced.n2(); ++y) {
        const int item = matching.a2[y];
        claim(item);
        if (item != reduced.f2[y] && item != reduced.s2[y])
            add("A2 applicant " + std::to_string(y) + " is matched to " + std::to_string(item) +
                ", neither its f2-item nor its s2-item");
    }

    // Every f-item must be taken by an applicant naming it first.
    const RoleMasks roles = derive_roles(reduced);
    std::vector<char> f1_served(reduced.m, 0), f2_served(reduced.m, 0);
    for (int x = 0; x < reduced.n1(); ++x)
        if (matching.a1[x] == reduced.f1[x]) f1_served[reduced.f1[x]] = 1;
    for (int y = 0; y < reduced.n2(); ++y)
        if (matching.a2[y] == reduced.f2[y]) f2_served[reduced.f2[y]] = 1;
    for (int item = 0; item < reduced.m; ++item) {
        if (roles.in_f1[item] && !f1_served[item])
            add("f1-item " + std::to_string(item) +
                " is not matched to an A1 applicant naming it first");
        if (roles.in_f2[item] && !f2_served[item])
            add("f2-item " + std::to_string(item) +
                " is not matched to an A2 applicant naming it first");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Witness machinery
// ---------------------------------------------------------------------------

namespace {

struct PathInComponent {
    std::vector<int> vertices;  // vertex indices
    std::vector<int> edges;     // edge ids
};

// BFS parents over a vertex subset; adjacency is scanned in ascending edge
// id order, so the forest is deterministic.
struct BfsForest {
    std::vector<int> parent_vertex;  // -1 for roots/unreached
    std::vector<int> parent_edge;
    std::vector<char> reached;
};

BfsForest bfs_from(const FsGraph& g, const std::vector<int>& sources,
                   const std::vector<char>* edge_allowed = nullptr) {
    BfsForest f;
    f.parent_vertex.assign(g.order(), -1);
    f.parent_edge.assign(g.order(), -1);
    f.reached.assign(g.order(), 0);
    std::queue<int> q;
    for (int s : sources) {
        f.reached[s] = 1;
        q.push(s);
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int e : g.incident(v)) {
            if (edge_allowed && !(*edge_allowed)[e]) continue;
            const FsEdge& edge = g.edges()[e];
            const int u = g.vertex_of(g.other_end(edge, g.vertices()[v].item));
            if (f.reached[u]) continue;
            f.reached[u] = 1;
            f.parent_vertex[u] = v;
            f.parent_edge[u] = e;
            q.push(u);
        }
    }
    return f;
}

// Path from a BFS root down to `v`, root first.
PathInComponent unwind(const BfsForest& f, int v) {
    PathInComponent p;
    int cur = v;
    while (cur >= 0) {
        p.vertices.push_back(cur);
        if (f.parent_vertex[cur] >= 0) p.edges.push_back(f.parent_edge[cur]);
        cur = f.parent_vertex[cur];
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

std::vector<int> items_of(const FsGraph& g, const std::vector<int>& vertex_indices) {
    std::vector<int> out;
    out.reserve(vertex_indices.size());
    for (int v : vertex_indices) out.push_back(g.vertices()[v].item);
    return out;
}

// The E2 edge carried by the lowest-indexed A2 applicant whose f2-item is
// this vertex; on graphs built from valid instances it exists for every
// F2 vertex.
int pendant_e2_edge(const FsGraph& g, int vertex) {
    const int item = g.vertices()[vertex].item;
    for (int e : g.incident(vertex)) {
        const FsEdge& edge = g.edges()[e];
        if (edge.cls == EdgeClass::E2 && edge.a == item) return e;
    }
    return -1;
}

// The unique cycle of a unicyclic component, as a closed walk: edge i joins
// walk vertex i and i+1 (mod length). Starts at the smallest item on the
// cycle and leaves it through its smallest incident cycle edge.
struct CycleWalk {
    std::vector<int> vertices;  // vertex indices
    std::vector<int> edges;     // edge ids
    std::vector<char> on_cycle_vertex;
    std::vector<char> on_cycle_edge;
};

CycleWalk unicycle(const FsGraph& g, const Component& comp) {
    std::vector<int> degree(g.order(), 0);
    std::vector<char> alive(g.edge_count(), 0);
    for (int e : comp.edges) {
        alive[e] = 1;
        degree[g.vertex_of(g.edges()[e].a)]++;
        degree[g.vertex_of(g.edges()[e].b)]++;
    }
    std::vector<int> stack;
    for (int v : comp.vertices)
        if (degree[v] == 1) stack.push_back(v);
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (degree[v] != 1) continue;
        for (int e : g.incident(v)) {
            if (!alive[e]) continue;
            alive[e] = 0;
            degree[v]--;
            const int u = g.vertex_of(g.other_end(g.edges()[e], g.vertices()[v].item));
            if (--degree[u] == 1) stack.push_back(u);
            break;
        }
    }

    CycleWalk walk;
    walk.on_cycle_vertex.assign(g.order(), 0);
    walk.on_cycle_edge = alive;
    int start = -1;
    for (int v : comp.vertices) {
        if (degree[v] >= 2) {
            walk.on_cycle_vertex[v] = 1;
            if (start < 0) start = v;
        }
    }
    int cur = start;
    int via = -1;
    do {
        walk.vertices.push_back(cur);
        int next_edge = -1;
        for (int e : g.incident(cur)) {
            if (alive[e] && e != via) {
                next_edge = e;
                break;
            }
        }
        walk.edges.push_back(next_edge);
        cur = g.vertex_of(g.other_end(g.edges()[next_edge], g.vertices()[cur].item));
        via = next_edge;
    } while (cur != start);
    return walk;
}

bool rotation_blocked(const FsGraph& g, const CycleWalk& walk, bool clockwise) {
    const std::size_t len = walk.edges.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (g.edges()[walk.edges[i]].cls != EdgeClass::E1) continue;
        // Clockwise sends edge i into walk vertex i+1, counterclockwise into
        // walk vertex i.
        const int head = clockwise ? walk.vertices[(i + 1) % len] : walk.vertices[i];
        if (g.vertices()[head].in_f2) return true;
    }
    return false;
}

std::optional<Witness> try_g1_tree(const FsGraph& g, const Component& comp) {
    // Pincer incidences: E1 edges whose s1-side endpoint also lies in F2.
    // Ordered by (vertex item, edge id).
    std::vector<std::pair<int, int>> incidences;  // (vertex index, edge id)
    for (int e : comp.edges) {
        const FsEdge& edge = g.edges()[e];
        if (edge.cls != EdgeClass::E1) continue;
        const int vb = g.vertex_of(edge.b);
        if (is_pincer_vertex(g.vertices()[vb])) incidences.emplace_back(vb, e);
    }
    std::sort(incidences.begin(), incidences.end(), [&](const auto& x, const auto& y) {
        return std::make_pair(g.vertices()[x.first].item, x.second) <
               std::make_pair(g.vertices()[y.first].item, y.second);
    });

    for (const auto& [u1, e1] : incidences) {
        const BfsForest forest = bfs_from(g, {u1});
        for (const auto& [u2, e2] : incidences) {
            if (u1 == u2) continue;
            // The tree path u1..u2 must leave u1 through e1 and enter u2
            // through e2: both pincers then aim their forced E1 edges at
            // each other along the same simple path.
            const PathInComponent path = unwind(forest, u2);
            if (path.edges.front() != e1 || path.edges.back() != e2) continue;
            const int t1 = pendant_e2_edge(g, u1);
            const int t2 = pendant_e2_edge(g, u2);
            if (t1 < 0 || t2 < 0) continue;

            Witness w;
            w.kind = WitnessKind::G1;
            w.path_vertices.push_back(g.other_end(g.edges()[t1], g.vertices()[u1].item));
            w.path_edges.push_back(t1);
            for (int v : path.vertices) w.path_vertices.push_back(g.vertices()[v].item);
            for (int e : path.edges) w.path_edges.push_back(e);
            w.path_edges.push_back(t2);
            w.path_vertices.push_back(g.other_end(g.edges()[t2], g.vertices()[u2].item));
            if (validate_witness(w, g)) return w;
        }
    }
    return std::nullopt;
}

std::optional<Witness> try_g2_unicyclic(const FsGraph& g, const Component& comp) {
    const CycleWalk walk = unicycle(g, comp);

    Witness w;
    w.kind = WitnessKind::G2;
    w.cycle_vertices = items_of(g, walk.vertices);
    w.cycle_edges = walk.edges;

    // Standard shape first: an off-cycle pincer whose forced E1 edge points
    // along its unique path toward the cycle.
    std::vector<char> tree_edges(g.edge_count(), 0);
    for (int e : comp.edges) tree_edges[e] = !walk.on_cycle_edge[e];
    std::vector<int> cycle_sources;
    for (int v : comp.vertices)
        if (walk.on_cycle_vertex[v]) cycle_sources.push_back(v);
    const BfsForest forest = bfs_from(g, cycle_sources, &tree_edges);

    for (int v : comp.vertices) {
        if (walk.on_cycle_vertex[v]) continue;
        if (!is_pincer_vertex(g.vertices()[v])) continue;
        const int toward = forest.parent_edge[v];
        if (toward < 0 || g.edges()[toward].cls != EdgeClass::E1) continue;
        const int tail = pendant_e2_edge(g, v);
        if (tail < 0) continue;

        PathInComponent down = unwind(forest, v);  // cycle vertex first
        std::reverse(down.vertices.begin(), down.vertices.end());
        std::reverse(down.edges.begin(), down.edges.end());
        w.path_vertices.clear();
        w.path_edges.clear();
        w.path_vertices.push_back(g.other_end(g.edges()[tail], g.vertices()[v].item));
        w.path_edges.push_back(tail);
        for (int pv : down.vertices) w.path_vertices.push_back(g.vertices()[pv].item);
        for (int pe : down.edges) w.path_edges.push_back(pe);
        if (validate_witness(w, g)) return w;
    }

    // Degenerate shape: the cycle itself admits neither rotation.
    if (rotation_blocked(g, walk, true) && rotation_blocked(g, walk, false)) {
        w.path_vertices.clear();
        w.path_edges.clear();
        if (validate_witness(w, g)) return w;
    }
    return std::nullopt;
}

Witness make_g3(const FsGraph& g, const Component& comp) {
    // Spanning tree; the first two non-tree edges close two distinct cycles.
    const BfsForest forest = bfs_from(g, {comp.vertices.front()});
    std::vector<char> used_as_parent(g.edge_count(), 0);
    for (int v : comp.vertices)
        if (forest.parent_edge[v] >= 0) used_as_parent[forest.parent_edge[v]] = 1;
    std::vector<int> non_tree;
    for (int e : comp.edges)
        if (!used_as_parent[e]) non_tree.push_back(e);

    auto tree_path = [&](int from, int to) {
        // Walk both ancestor chains; the LCA is the first shared vertex.
        std::vector<char> mark(g.order(), 0);
        for (int v = from; v >= 0; v = forest.parent_vertex[v]) mark[v] = 1;
        int lca = to;
        while (!mark[lca]) lca = forest.parent_vertex[lca];
        PathInComponent p;
        for (int v = from; v != lca; v = forest.parent_vertex[v]) {
            p.vertices.push_back(v);
            p.edges.push_back(forest.parent_edge[v]);
        }
        p.vertices.push_back(lca);
        std::vector<int> up_v, up_e;
        for (int v = to; v != lca; v = forest.parent_vertex[v]) {
            up_v.push_back(v);
            up_e.push_back(forest.parent_edge[v]);
        }
        for (std::size_t i = up_v.size(); i > 0; --i) {
            p.vertices.push_back(up_v[i - 1]);
            p.edges.push_back(up_e[i - 1]);
        }
        return p;
    };

    auto close_cycle = [&](int e) {
        const FsEdge& edge = g.edges()[e];
        PathInComponent p = tree_path(g.vertex_of(edge.a), g.vertex_of(edge.b));
        p.edges.push_back(e);  // closes the walk back to its first vertex
        return p;
    };

    const PathInComponent c1 = close_cycle(non_tree[0]);
    const PathInComponent c2 = close_cycle(non_tree[1]);

    Witness w;
    w.kind = WitnessKind::G3;
    w.cycle_vertices = items_of(g, c1.vertices);
    w.cycle_edges = c1.edges;
    w.cycle2_vertices = items_of(g, c2.vertices);
    w.cycle2_edges = c2.edges;

    std::vector<char> in_c1(g.order(), 0), in_c2(g.order(), 0);
    for (int v : c1.vertices) in_c1[v] = 1;
    for (int v : c2.vertices) in_c2[v] = 1;
    bool touching = false;
    for (int v : c2.vertices) touching = touching || in_c1[v];
    if (!touching) {
        // Shortest connector: the c2 vertex of least BFS depth from c1,
        // ties broken by component vertex order.
        const BfsForest link = bfs_from(g, c1.vertices);
        auto depth = [&](int v) {
            int d = 0;
            for (int cur = v; link.parent_vertex[cur] >= 0; cur = link.parent_vertex[cur]) ++d;
            return d;
        };
        int best = -1, best_depth = INT_MAX;
        for (int v : comp.vertices) {
            if (!in_c2[v] || !link.reached[v]) continue;
            const int d = depth(v);
            if (d < best_depth) {
                best_depth = d;
                best = v;
            }
        }
        const PathInComponent connector = unwind(link, best);
        w.path_vertices = items_of(g, connector.vertices);
        w.path_edges = connector.edges;
    }
    return w;
}

bool sequence_ok(const FsGraph& g, const std::vector<int>& items, const std::vector<int>& edges,
                 bool closed) {
    if (items.empty()) return edges.empty();
    if (closed) {
        if (items.size() != edges.size() || items.size() < 2) return false;
    } else if (edges.size() + 1 != items.size()) {
        return false;
    }
    for (int item : items)
        if (g.vertex_of(item) < 0) return false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] < 0 || edges[i] >= g.edge_count()) return false;
        const FsEdge& e = g.edges()[edges[i]];
        const int from = items[i];
        const int to = items[(i + 1) % items.size()];
        if (!((e.a == from && e.b == to) || (e.a == to && e.b == from))) return false;
    }
    return true;
}

bool all_distinct(const std::vector<int>& v) {
    std::unordered_set<int> seen(v.begin(), v.end());
    return seen.size() == v.size();
}

}  // namespace

std::optional<Witness> find_witness(const FsGraph& g) {
    for (const Component& comp : g.components()) {
        switch (comp.cls) {
            case ComponentClass::Multicyclic:
                return make_g3(g, comp);
            case ComponentClass::Unicyclic:
                if (auto w = try_g2_unicyclic(g, comp)) return w;
                break;
            case ComponentClass::Tree:
                if (auto w = try_g1_tree(g, comp)) return w;
                break;
        }
    }
    return std::nullopt;
}

bool validate_witness(const Witness& w, const FsGraph& g) {
    const auto& vs = w.path_vertices;
    const auto& es = w.path_edges;
    auto vertex = [&](int item) -> const FsVertex& { return g.vertices()[g.vertex_of(item)]; };
    auto cls = [&](int e) { return g.edges()[e].cls; };

    switch (w.kind) {
        case WitnessKind::G1: {
            if (!w.cycle_vertices.empty() || !w.cycle2_vertices.empty()) return false;
            if (!sequence_ok(g, vs, es, false)) return false;
            const std::size_t k = vs.size();
            if (k < 5 || !all_distinct(vs) || !all_distinct(es)) return false;
            const FsVertex& v2 = vertex(vs[1]);
            const FsVertex& vk1 = vertex(vs[k - 2]);
            return cls(es[0]) == EdgeClass::E2 && v2.in_s1 && v2.in_f2 &&
                   cls(es[1]) == EdgeClass::E1 && cls(es[k - 3]) == EdgeClass::E1 &&
                   vk1.in_s1 && vk1.in_f2 && cls(es[k - 2]) == EdgeClass::E2;
        }
        case WitnessKind::G2: {
            if (!w.cycle2_vertices.empty()) return false;
            if (w.cycle_vertices.empty()) return false;
            if (!sequence_ok(g, w.cycle_vertices, w.cycle_edges, true)) return false;
            if (!all_distinct(w.cycle_vertices) || !all_distinct(w.cycle_edges)) return false;
            std::unordered_set<int> cyc_items(w.cycle_vertices.begin(), w.cycle_vertices.end());
            std::unordered_set<int> cyc_edges(w.cycle_edges.begin(), w.cycle_edges.end());
            if (vs.empty()) {
                // Degenerate: neither rotation of the cycle is admissible.
                CycleWalk walk;
                walk.vertices.reserve(w.cycle_vertices.size());
                for (int item : w.cycle_vertices) walk.vertices.push_back(g.vertex_of(item));
                walk.edges = w.cycle_edges;
                return rotation_blocked(g, walk, true) && rotation_blocked(g, walk, false);
            }
            if (!sequence_ok(g, vs, es, false)) return false;
            const std::size_t k = vs.size();
            if (k < 3 || !all_distinct(vs) || !all_distinct(es)) return false;
            // The path meets the cycle exactly at its last vertex.
            for (std::size_t i = 0; i + 1 < k; ++i)
                if (cyc_items.count(vs[i])) return false;
            if (!cyc_items.count(vs[k - 1])) return false;
            for (int e : es)
                if (cyc_edges.count(e)) return false;
            const FsVertex& v2 = vertex(vs[1]);
            return cls(es[0]) == EdgeClass::E2 && v2.in_s1 && v2.in_f2 &&
                   cls(es[1]) == EdgeClass::E1;
        }
        case WitnessKind::G3: {
            if (w.cycle_vertices.empty() || w.cycle2_vertices.empty()) return false;
            if (!sequence_ok(g, w.cycle_vertices, w.cycle_edges, true)) return false;
            if (!sequence_ok(g, w.cycle2_vertices, w.cycle2_edges, true)) return false;
            if (!vs.empty() && !sequence_ok(g, vs, es, false)) return false;
            const std::vector<int> edges = w.all_edges();
            const std::vector<int> items = w.all_vertices();
            for (int e : edges)
                if (e < 0 || e >= g.edge_count()) return false;
            // Connected and with cycle rank >= 2, i.e. two distinct cycles.
            std::unordered_set<int> item_set(items.begin(), items.end());
            std::vector<int> stack{items.front()};
            std::unordered_set<int> edge_set(edges.begin(), edges.end());
            std::unordered_set<int> seen{items.front()};
            while (!stack.empty()) {
                const int item = stack.back();
                stack.pop_back();
                for (int e : g.incident(g.vertex_of(item))) {
                    if (!edge_set.count(e)) continue;
                    const int other = g.other_end(g.edges()[e], item);
                    if (item_set.count(other) && seen.insert(other).second)
                        stack.push_back(other);
                }
            }
            if (seen.size() != item_set.size()) return false;
            return edges.size() >= items.size() + 1;
        }
    }
    return false;
}

bool exists_2wpm(const ReducedInstance& reduced) {
    if (!reduced.weights.dominant())
        throw WeightsNotDominant("the characterization requires w1 >= 2*w2 (got w1=" +
                                 std::to_string(reduced.weights.w1) +
                                 ", w2=" + std::to_string(reduced.weights.w2) + ")");
    return solve_orientation(FsGraph::build(reduced)).has_value();
}

}  // namespace wpm
