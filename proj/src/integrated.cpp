#include "mixspec/integrated.hpp"

#include <stdexcept>

namespace mixspec {

IntegratedMatrix integrated_adjacency(const MixedGraph& g) {
    const int n = g.vertex_count();
    IndexMap idx{n};
    IntMatrix m(2 * n, 2 * n);
    for (const auto& [key, s] : g.edges()) {
        const auto [u, v] = key;
        m.at(idx.prime(u), idx.prime(v)) = s;
        m.at(idx.prime(v), idx.prime(u)) = s;
        m.at(idx.dprime(u), idx.dprime(v)) = s;
        m.at(idx.dprime(v), idx.dprime(u)) = s;
    }
    for (const auto& [v, r] : g.loops()) {
        m.at(idx.prime(v), idx.prime(v)) = 2 * r;
        m.at(idx.dprime(v), idx.dprime(v)) = 2 * r;
    }
    for (const auto& [key, t] : g.arcs()) {
        const auto [u, v] = key;
        m.at(idx.prime(u), idx.dprime(v)) = t;
        m.at(idx.dprime(v), idx.prime(u)) = t;
    }
    for (const auto& [v, t] : g.dloops()) {
        m.at(idx.prime(v), idx.dprime(v)) = t;
        m.at(idx.dprime(v), idx.prime(v)) = t;
    }
    return {std::move(m), idx};
}

MixedGraph from_integrated(const IntMatrix& m, const IndexMap& idx) {
    const int n = idx.n;
    if (!m.square() || m.rows() != 2 * n)
        throw std::invalid_argument("not an integrated adjacency matrix: dimension is not 2n");
    if (!m.is_symmetric())
        throw std::invalid_argument("not an integrated adjacency matrix: not symmetric");
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j)
            if (m.at(i, j) < 0)
                throw std::invalid_argument("not an integrated adjacency matrix: negative entry");
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) % 2 != 0 || m.at(n + i, n + i) % 2 != 0)
            throw std::invalid_argument("not an integrated adjacency matrix: odd diagonal entry");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) != m.at(n + i, n + j))
                throw std::invalid_argument(
                    "not an integrated adjacency matrix: diagonal blocks differ");
            if (m.at(i, n + j) != m.at(n + j, i))
                throw std::invalid_argument(
                    "not an integrated adjacency matrix: off-diagonal blocks not transposed");
        }

    MixedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != 0) g = g.add_edge(i, j, static_cast<int>(m.at(i, j).get_si()));
    for (int i = 0; i < n; ++i)
        if (m.at(i, i) != 0) g = g.add_loop(i, static_cast<int>(m.at(i, i).get_si()) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m.at(i, n + j) != 0) g = g.add_arc(i, j, static_cast<int>(m.at(i, n + j).get_si()));
        }
    for (int i = 0; i < n; ++i)
        if (m.at(i, n + i) != 0) g = g.add_dloop(i, static_cast<int>(m.at(i, n + i).get_si()));
    return g;
}

AssociatedGraph associated_graph(const MixedGraph& g) {
    const int n = g.vertex_count();
    IndexMap idx{n};
    MixedGraph base(2 * n);
    for (const auto& [key, s] : g.edges()) {
        const auto [u, v] = key;
        base = base.add_edge(idx.prime(u), idx.prime(v), s);
        base = base.add_edge(idx.dprime(u), idx.dprime(v), s);
    }
    for (const auto& [v, r] : g.loops()) {
        base = base.add_loop(idx.prime(v), r);
        base = base.add_loop(idx.dprime(v), r);
    }
    for (const auto& [key, t] : g.arcs()) {
        const auto [u, v] = key;
        base = base.add_edge(idx.prime(u), idx.dprime(v), t);
    }
    for (const auto& [v, t] : g.dloops()) base = base.add_edge(idx.prime(v), idx.dprime(v), t);
    return {std::move(base), idx};
}

}  // namespace mixspec
