#pragma once

#include "mixspec/int_matrix.hpp"
#include "mixspec/mixed_graph.hpp"

namespace mixspec {

// Row/column convention of the 2n x 2n integrated adjacency matrix:
// index k < n is the primed copy of vertex k, index k >= n the
// double-primed copy of vertex k-n.
struct IndexMap {
    int n = 0;

    int prime(Vertex v) const { return v; }
    int dprime(Vertex v) const { return n + v; }
    bool is_prime(int idx) const { return idx < n; }
    Vertex vertex_of(int idx) const { return idx < n ? idx : idx - n; }
    int size() const { return 2 * n; }
};

// Undirected multigraph on the 2n vertex copies whose adjacency matrix is
// the integrated adjacency matrix of the source graph.
struct AssociatedGraph {
    MixedGraph base;  // arcs and directed loops empty
    IndexMap labels;
};

struct IntegratedMatrix {
    IntMatrix matrix;
    IndexMap index;
};

// The 2n x 2n block matrix [[A(G_u), A(G_d)], [A(G_d)^T, A(G_u)]]:
// edge multiplicity s at (i',j') and (i'',j''), 2r on the diagonal for r
// loops, arc multiplicity t at (i',j''), directed loops at (i',i'').
IntegratedMatrix integrated_adjacency(const MixedGraph& g);

// Inverse of integrated_adjacency; throws std::invalid_argument naming the
// violated structural condition when the matrix is not an integrated
// adjacency matrix.
MixedGraph from_integrated(const IntMatrix& m, const IndexMap& idx);

AssociatedGraph associated_graph(const MixedGraph& g);

}  // namespace mixspec
