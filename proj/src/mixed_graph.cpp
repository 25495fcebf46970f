#include "mixspec/mixed_graph.hpp"

#include <stdexcept>
#include <string>

namespace mixspec {

namespace {

VertexPair edge_key(Vertex u, Vertex v) {
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

void bump(std::map<VertexPair, int>& m, VertexPair key, int delta) {
    int& slot = m[key];
    slot += delta;
    if (slot < 0) throw std::invalid_argument("multiplicity went negative");
    if (slot == 0) m.erase(key);
}

void bump(std::map<Vertex, int>& m, Vertex key, int delta) {
    int& slot = m[key];
    slot += delta;
    if (slot < 0) throw std::invalid_argument("multiplicity went negative");
    if (slot == 0) m.erase(key);
}

template <typename Map, typename Key>
int lookup(const Map& m, const Key& k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
}

}  // namespace

MixedGraph::MixedGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

void MixedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

int MixedGraph::edge_multiplicity(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    return lookup(edges_, edge_key(u, v));
}

int MixedGraph::arc_multiplicity(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    return lookup(arcs_, VertexPair{u, v});
}

int MixedGraph::loop_count(Vertex v) const {
    check_vertex(v);
    return lookup(loops_, v);
}

int MixedGraph::dloop_count(Vertex v) const {
    check_vertex(v);
    return lookup(dloops_, v);
}

MixedGraph MixedGraph::add_edge(Vertex u, Vertex v, int mult) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("edge endpoints must differ; use add_loop");
    if (mult < 0) throw std::invalid_argument("negative edge multiplicity");
    MixedGraph g = *this;
    if (mult > 0) bump(g.edges_, edge_key(u, v), mult);
    return g;
}

MixedGraph MixedGraph::add_arc(Vertex u, Vertex v, int mult) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("arc endpoints must differ; use add_dloop");
    if (mult < 0) throw std::invalid_argument("negative arc multiplicity");
    MixedGraph g = *this;
    if (mult > 0) bump(g.arcs_, VertexPair{u, v}, mult);
    return g;
}

MixedGraph MixedGraph::add_loop(Vertex v, int mult) const {
    check_vertex(v);
    if (mult < 0) throw std::invalid_argument("negative loop multiplicity");
    MixedGraph g = *this;
    if (mult > 0) bump(g.loops_, v, mult);
    return g;
}

MixedGraph MixedGraph::add_dloop(Vertex v, int mult) const {
    check_vertex(v);
    if (mult < 0) throw std::invalid_argument("negative directed-loop multiplicity");
    MixedGraph g = *this;
    if (mult > 0) bump(g.dloops_, v, mult);
    return g;
}

MixedGraph MixedGraph::delete_edge(Vertex u, Vertex v) const {
    if (edge_multiplicity(u, v) == 0) throw std::invalid_argument("no such edge to delete");
    MixedGraph g = *this;
    bump(g.edges_, edge_key(u, v), -1);
    return g;
}

MixedGraph MixedGraph::delete_arc(Vertex u, Vertex v) const {
    if (arc_multiplicity(u, v) == 0) throw std::invalid_argument("no such arc to delete");
    MixedGraph g = *this;
    bump(g.arcs_, VertexPair{u, v}, -1);
    return g;
}

MixedGraph MixedGraph::delete_loop(Vertex v) const {
    if (loop_count(v) == 0) throw std::invalid_argument("no such loop to delete");
    MixedGraph g = *this;
    bump(g.loops_, v, -1);
    return g;
}

MixedGraph MixedGraph::delete_dloop(Vertex v) const {
    if (dloop_count(v) == 0) throw std::invalid_argument("no such directed loop to delete");
    MixedGraph g = *this;
    bump(g.dloops_, v, -1);
    return g;
}

MixedGraph MixedGraph::delete_vertex(Vertex v, std::map<Vertex, Vertex>* relabel) const {
    check_vertex(v);
    std::set<Vertex> keep;
    for (Vertex u = 0; u < n_; ++u)
        if (u != v) keep.insert(u);
    return induced_submixed(keep, relabel);
}

DegreeProfile MixedGraph::degree_profile(Vertex v) const {
    check_vertex(v);
    DegreeProfile p;
    for (const auto& [key, m] : edges_)
        if (key.first == v || key.second == v) p.d += m;
    p.l = lookup(loops_, v);
    p.d += 2 * p.l;
    for (const auto& [key, m] : arcs_) {
        if (key.first == v) p.dplus += m;
        if (key.second == v) p.dminus += m;
    }
    int dl = lookup(dloops_, v);
    p.dplus += dl;
    p.dminus += dl;
    return p;
}

Counts MixedGraph::counts() const {
    Counts c;
    for (const auto& [key, m] : edges_) c.edges += m;
    for (const auto& [key, m] : arcs_) c.arcs += m;
    for (const auto& [v, m] : loops_) c.loops += m;
    for (const auto& [v, m] : dloops_) {
        c.dloops += m;
        c.arcs += m;
    }
    return c;
}

bool MixedGraph::is_simple() const {
    if (!loops_.empty() || !dloops_.empty()) return false;
    for (const auto& [key, m] : edges_)
        if (m > 1) return false;
    for (const auto& [key, m] : arcs_)
        if (m > 1) return false;
    return true;
}

MixedGraph MixedGraph::induced_submixed(const std::set<Vertex>& vs,
                                        std::map<Vertex, Vertex>* relabel) const {
    std::map<Vertex, Vertex> map;
    Vertex next = 0;
    for (Vertex v : vs) {
        check_vertex(v);
        map[v] = next++;
    }
    MixedGraph g(static_cast<int>(vs.size()));
    for (const auto& [key, m] : edges_) {
        auto a = map.find(key.first), b = map.find(key.second);
        if (a != map.end() && b != map.end()) bump(g.edges_, edge_key(a->second, b->second), m);
    }
    for (const auto& [key, m] : arcs_) {
        auto a = map.find(key.first), b = map.find(key.second);
        if (a != map.end() && b != map.end()) bump(g.arcs_, {a->second, b->second}, m);
    }
    for (const auto& [v, m] : loops_) {
        auto a = map.find(v);
        if (a != map.end()) bump(g.loops_, a->second, m);
    }
    for (const auto& [v, m] : dloops_) {
        auto a = map.find(v);
        if (a != map.end()) bump(g.dloops_, a->second, m);
    }
    if (relabel) *relabel = std::move(map);
    return g;
}

}  // namespace mixspec
