#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mixspec/mixed_graph.hpp"
#include "mixspec/spectra.hpp"

namespace mixspec {

struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool strict = false;
    double slack() const { return rhs - lhs; }
    bool pass(double tol = 1e-8) const { return strict ? slack() > 0 : slack() >= -tol; }
};

struct BoundsReport {
    int delta1 = 0, delta2 = 0;    // maxima of d+d^+ and d+d^-
    int sdelta1 = 0, sdelta2 = 0;  // the minima
    double lambda1 = 0.0, lambda2 = 0.0, lambda_second_last = 0.0, lambda_last = 0.0;
    std::vector<BoundCheck> checks;

    bool all_pass(double tol = 1e-8) const {
        for (const BoundCheck& c : checks)
            if (!c.pass(tol)) return false;
        return true;
    }
};

// Every eigenvalue bound stated in terms of degrees, edge and arc counts:
// |lambda| <= max(Delta1, Delta2), the delta sandwich around lambda_1, the
// average-degree quotient interlacing, the spectral-radius square-root bound,
// and lambda_1 + lambda_2n <= 2 lambda_1(G_u). Requires a simple graph.
BoundsReport degree_bounds(const MixedGraph& g);

struct DeletionEntry {
    bool is_vertex = false;
    Vertex u = 0, v = 0;  // vertex id, or arc (u,v)
    double lambda1_after = 0.0;
    double margin = 0.0;  // lambda1(G) - lambda1 after deletion
};

struct DeletionReport {
    double lambda1 = 0.0;
    std::vector<DeletionEntry> entries;
    bool all_strict = true;
};

// Strict decrease of the top eigenvalue under every vertex and arc deletion.
// Requires the associated graph to be simple and connected.
DeletionReport deletion_monotonicity(const MixedGraph& g);

struct RegularSubgraphReport {
    int r = 0;
    int sub_size = 0;
    double average_degree = 0.0;  // of the associated induced subgraph
    double quotient = 0.0;        // (n d' - r n') / (n - n')
    double lambda2 = 0.0, lambda_last = 0.0;
    bool pass = false;
};

// lambda_2n <= (n d' - r n')/(n - n') <= lambda_2 for an r-regular simple
// graph and a proper nonempty vertex subset.
RegularSubgraphReport regular_subgraph_bound(const MixedGraph& g, const std::set<Vertex>& vs);

inline constexpr int kExhaustiveSearchCap = 15;

// Exact independence number by masked search with pruning; nullopt when the
// graph exceeds the cap. Adjacency means an edge or an arc either way.
std::optional<int> independence_number(const MixedGraph& g, int cap = kExhaustiveSearchCap);

// Exact clique number; a clique joins every pair by an edge plus both arcs.
std::optional<int> clique_number(const MixedGraph& g, int cap = kExhaustiveSearchCap);

struct IndependenceReport {
    std::optional<int> alpha;  // absent past the search cap
    SignCounts sign_counts;
    double bound_sign_counts = 0.0;            // min((2n-n+)/2, (2n-n-)/2)
    std::optional<double> bound_regular;       // -n lambda_2n / (r - lambda_2n)
    bool capped = false;
    bool pass = true;  // alpha respects every available bound
};

IndependenceReport independence_bounds(const MixedGraph& g, int cap = kExhaustiveSearchCap);

struct CliqueReport {
    std::optional<int> omega;
    SignCounts p_counts;  // around 0
    SignCounts q_counts;  // around -2
    double s = 0.0;       // min of the five eigenvalue expressions
    bool capped = false;
    bool pass = true;
};

CliqueReport clique_bound(const MixedGraph& g, int cap = kExhaustiveSearchCap);

}  // namespace mixspec
