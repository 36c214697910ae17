#include "wpm/fsgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace wpm {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FsGraph FsGraph::build(const ReducedInstance& r) {
    const auto violations = validate(r);
    if (!violations.empty()) {
        std::string msg = "invalid instance: " + violations.front().what;
        if (violations.size() > 1)
            msg += " (+" + std::to_string(violations.size() - 1) + " more)";
        throw InvalidParams(msg);
    }

    FsGraph g;
    g.n1_ = r.n1();
    const RoleMasks roles = derive_roles(r);

    g.item_to_vertex_.assign(r.m, -1);
    for (int item = 0; item < r.m; ++item) {
        if (roles.in_f1[item] || roles.in_s1[item] || roles.in_f2[item] || roles.in_s2[item]) {
            FsVertex v;
            v.item = item;
            v.in_f1 = roles.in_f1[item];
            v.in_s1 = roles.in_s1[item];
            v.in_f2 = roles.in_f2[item];
            v.in_s2 = roles.in_s2[item];
            g.item_to_vertex_[item] = static_cast<int>(g.vertices_.size());
            g.vertices_.push_back(v);
        }
    }

    g.edges_.reserve(r.n());
    for (int x = 0; x < r.n1(); ++x)
        g.edges_.push_back({static_cast<int>(g.edges_.size()), EdgeClass::E1, x, r.f1[x], r.s1[x]});
    for (int y = 0; y < r.n2(); ++y)
        g.edges_.push_back({static_cast<int>(g.edges_.size()), EdgeClass::E2, y, r.f2[y], r.s2[y]});

    g.adjacency_.assign(g.vertices_.size(), {});
    for (const FsEdge& e : g.edges_) {
        g.adjacency_[g.item_to_vertex_[e.a]].push_back(e.id);
        g.adjacency_[g.item_to_vertex_[e.b]].push_back(e.id);
    }

    Dsu dsu(g.order());
    for (const FsEdge& e : g.edges_)
        dsu.merge(g.item_to_vertex_[e.a], g.item_to_vertex_[e.b]);

    std::map<int, Component> by_root;  // keyed by root vertex index = min item order
    for (int v = 0; v < g.order(); ++v) by_root[dsu.find(v)].vertices.push_back(v);
    for (const FsEdge& e : g.edges_)
        by_root[dsu.find(g.item_to_vertex_[e.a])].edges.push_back(e.id);

    for (auto& [root, comp] : by_root) {
        comp.min_item = g.vertices_[comp.vertices.front()].item;
        const int vc = static_cast<int>(comp.vertices.size());
        const int ec = static_cast<int>(comp.edges.size());
        comp.cls = ec == vc - 1 ? ComponentClass::Tree
                 : ec == vc     ? ComponentClass::Unicyclic
                                : ComponentClass::Multicyclic;
        g.components_.push_back(std::move(comp));
    }
    std::sort(g.components_.begin(), g.components_.end(),
              [](const Component& a, const Component& b) { return a.min_item < b.min_item; });
    return g;
}

CycleCensus cycle_census(const FsGraph& g) {
    CycleCensus census;
    for (const Component& comp : g.components()) {
        const int vc = static_cast<int>(comp.vertices.size());
        const int ec = static_cast<int>(comp.edges.size());
        if (comp.cls == ComponentClass::Tree) continue;
        if (comp.cls == ComponentClass::Multicyclic) {
            census.unresolved += ec - vc + 1;
            continue;
        }
        // Unicyclic: prune degree-1 vertices until only the cycle remains.
        std::vector<int> degree(g.order(), 0);
        std::vector<char> edge_alive(g.edge_count(), 0);
        for (int e : comp.edges) {
            edge_alive[e] = 1;
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
                if (!edge_alive[e]) continue;
                edge_alive[e] = 0;
                degree[v]--;
                const int u = g.vertex_of(g.other_end(g.edges()[e], g.vertices()[v].item));
                if (--degree[u] == 1) stack.push_back(u);
                break;
            }
        }
        int len = 0;
        for (int e : comp.edges) len += edge_alive[e];
        census.lengths.push_back(len);
    }
    return census;
}

std::string to_dot(const FsGraph& g) {
    std::ostringstream out;
    out << "graph fs {\n";
    for (const FsVertex& v : g.vertices()) {
        out << "  i" << v.item << " [label=\"" << v.item;
        const char* sep = " ";
        if (v.in_f1) { out << sep << "F1"; sep = "|"; }
        if (v.in_s1) { out << sep << "S1"; sep = "|"; }
        if (v.in_f2) { out << sep << "F2"; sep = "|"; }
        if (v.in_s2) { out << sep << "S2"; sep = "|"; }
        out << "\"];\n";
    }
    for (const FsEdge& e : g.edges()) {
        out << "  i" << e.a << " -- i" << e.b << " [label=\""
            << (e.cls == EdgeClass::E1 ? "E1 x" : "E2 y") << e.applicant << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace wpm
