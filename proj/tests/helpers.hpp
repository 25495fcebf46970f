#pragma once

#include <random>

#include "mixspec/families.hpp"
#include "mixspec/mixed_graph.hpp"

namespace testutil {

inline std::mt19937 make_rng(unsigned seed = 0x5eed1234u) { return std::mt19937{seed}; }

// Simple mixed graph: each unordered pair draws an edge and each ordered
// pair an arc independently.
inline mixspec::MixedGraph random_simple(std::mt19937& rng, int n, double p_edge = 0.35,
                                         double p_arc = 0.3) {
    std::bernoulli_distribution edge(p_edge), arc(p_arc);
    mixspec::MixedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (edge(rng)) g = g.add_edge(u, v);
            if (arc(rng)) g = g.add_arc(u, v);
            if (arc(rng)) g = g.add_arc(v, u);
        }
    return g;
}

// Mixed multigraph with multiplicities up to max_mult, loops and directed
// loops included.
inline mixspec::MixedGraph random_multi(std::mt19937& rng, int n, int max_mult = 3,
                                        double p = 0.25) {
    std::bernoulli_distribution hit(p);
    std::uniform_int_distribution<int> mult(1, max_mult);
    mixspec::MixedGraph g(n);
    for (int u = 0; u < n; ++u) {
        if (hit(rng)) g = g.add_loop(u, mult(rng));
        if (hit(rng)) g = g.add_dloop(u, mult(rng));
        for (int v = u + 1; v < n; ++v) {
            if (hit(rng)) g = g.add_edge(u, v, mult(rng));
            if (hit(rng)) g = g.add_arc(u, v, mult(rng));
            if (hit(rng)) g = g.add_arc(v, u, mult(rng));
        }
    }
    return g;
}

// Appends a disjoint copy of piece to base.
inline mixspec::MixedGraph disjoint_union(const mixspec::MixedGraph& base,
                                          const mixspec::MixedGraph& piece) {
    const int off = base.vertex_count();
    mixspec::MixedGraph g(off + piece.vertex_count());
    for (const auto& [key, m] : base.edges()) g = g.add_edge(key.first, key.second, m);
    for (const auto& [key, m] : base.arcs()) g = g.add_arc(key.first, key.second, m);
    for (const auto& [v, m] : base.loops()) g = g.add_loop(v, m);
    for (const auto& [v, m] : base.dloops()) g = g.add_dloop(v, m);
    for (const auto& [key, m] : piece.edges()) g = g.add_edge(off + key.first, off + key.second, m);
    for (const auto& [key, m] : piece.arcs()) g = g.add_arc(off + key.first, off + key.second, m);
    for (const auto& [v, m] : piece.loops()) g = g.add_loop(off + v, m);
    for (const auto& [v, m] : piece.dloops()) g = g.add_dloop(off + v, m);
    return g;
}

// Disjoint union of random simple blocks whose mixed components all carry
// the associated path or cycle shape.
inline mixspec::MixedGraph random_apac_union(std::mt19937& rng, int max_blocks = 4) {
    using mixspec::Family;
    std::uniform_int_distribution<int> nblocks(1, max_blocks);
    std::uniform_int_distribution<int> kind(0, 6);
    std::uniform_int_distribution<int> small(1, 4);
    mixspec::MixedGraph g(0);
    const int blocks = nblocks(rng);
    for (int b = 0; b < blocks; ++b) {
        mixspec::MixedGraph piece;
        switch (kind(rng)) {
            case 0: piece = mixspec::generate({Family::Path, {small(rng)}}); break;
            case 1: piece = mixspec::generate({Family::Cycle, {small(rng) + 2}}); break;
            case 2: {  // digon
                piece = mixspec::MixedGraph(2).add_arc(0, 1).add_arc(1, 0);
                break;
            }
            case 3: {  // edge plus one arc
                piece = mixspec::MixedGraph(2).add_edge(0, 1).add_arc(0, 1);
                break;
            }
            case 4: piece = mixspec::alt_path_witness(small(rng) + 1); break;
            case 5: piece = mixspec::alt_cycle_even_witness(small(rng) + 1); break;
            case 6: piece = mixspec::generate({Family::OrientedCycleSame, {small(rng) + 2}}); break;
        }
        g = disjoint_union(g, piece);
    }
    return g;
}

}  // namespace testutil
