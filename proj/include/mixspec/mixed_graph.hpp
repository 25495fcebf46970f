#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace mixspec {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;  // edges: first < second; arcs: (tail, head)

struct DegreeProfile {
    int d = 0;       // undirected degree, each loop counted twice
    int dplus = 0;   // out-degree, directed loops included
    int dminus = 0;  // in-degree, directed loops included
    int l = 0;       // loops at the vertex

    bool operator==(const DegreeProfile&) const = default;
};

struct Counts {
    long long edges = 0;   // edge multiplicity total, loops excluded
    long long arcs = 0;    // arc multiplicity total, directed loops included
    long long loops = 0;   // loop multiplicity total
    long long dloops = 0;  // directed-loop multiplicity total

    bool operator==(const Counts&) const = default;
};

// Immutable mixed multigraph: vertices 0..n-1, a multiset of edges (unordered
// pairs, stored with first < second), loops, arcs (ordered pairs), and
// directed loops. Canonical form: zero-multiplicity entries are absent, so
// two values describing the same multigraph compare equal.
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(int n);

    int vertex_count() const { return n_; }

    const std::map<VertexPair, int>& edges() const { return edges_; }
    const std::map<VertexPair, int>& arcs() const { return arcs_; }
    const std::map<Vertex, int>& loops() const { return loops_; }
    const std::map<Vertex, int>& dloops() const { return dloops_; }

    int edge_multiplicity(Vertex u, Vertex v) const;
    int arc_multiplicity(Vertex u, Vertex v) const;  // arcs u -> v
    int loop_count(Vertex v) const;
    int dloop_count(Vertex v) const;

    // Value-returning mutators; multiplicities accumulate.
    MixedGraph add_edge(Vertex u, Vertex v, int mult = 1) const;
    MixedGraph add_arc(Vertex u, Vertex v, int mult = 1) const;
    MixedGraph add_loop(Vertex v, int mult = 1) const;
    MixedGraph add_dloop(Vertex v, int mult = 1) const;

    // Deletion decrements multiplicity by one; absent element is a domain error.
    MixedGraph delete_edge(Vertex u, Vertex v) const;
    MixedGraph delete_arc(Vertex u, Vertex v) const;
    MixedGraph delete_loop(Vertex v) const;
    MixedGraph delete_dloop(Vertex v) const;
    // Removes the vertex with everything incident and relabels contiguously,
    // reporting the relabeling (old id -> new id) when asked.
    MixedGraph delete_vertex(Vertex v, std::map<Vertex, Vertex>* relabel = nullptr) const;

    DegreeProfile degree_profile(Vertex v) const;
    Counts counts() const;
    bool is_simple() const;

    // Keeps every element with all endpoints inside vs; vertices are
    // relabeled 0..|vs|-1 in increasing id order, reported through relabel
    // (old id -> new id).
    MixedGraph induced_submixed(const std::set<Vertex>& vs,
                                std::map<Vertex, Vertex>* relabel = nullptr) const;

    bool operator==(const MixedGraph&) const = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::map<VertexPair, int> edges_;
    std::map<Vertex, int> loops_;
    std::map<VertexPair, int> arcs_;
    std::map<Vertex, int> dloops_;
};

}  // namespace mixspec
