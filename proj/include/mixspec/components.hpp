#pragma once

#include <gmpxx.h>

#include <set>
#include <vector>

#include "mixspec/integrated.hpp"
#include "mixspec/mixed_graph.hpp"

namespace mixspec {

enum class ComponentType { TypeI, TypeII, TypeIII };

// One mixed component: a submixed graph of G tagged with its type, the
// component of the associated graph it corresponds to, and the derived
// quantities used by the determinant formula.
struct MixedComponent {
    std::set<Vertex> vertices;
    std::map<VertexPair, int> edges;
    std::map<Vertex, int> loops;
    std::map<VertexPair, int> arcs;
    std::map<Vertex, int> dloops;

    ComponentType ctype = ComponentType::TypeI;
    std::set<int> assoc_component;  // associated-graph vertex ids (2n indexing)

    std::set<Vertex> theta;         // vertices with both copies in the associated component
    std::map<VertexPair, int> omega;  // edges with both copies in it
    long long t = 0;                // |E_H| + |Omega_H| + |arcs of H|, multiplicities counted

    bool is_ap = false;  // associated component is a path
    bool is_ac = false;  // associated component is a cycle
    bool t_even() const { return t % 2 == 0; }
};

struct Decomposition {
    std::vector<MixedComponent> components;
    int p_ac = 0;    // components with the AC property
    int q_ap = 0;    // components with the AP property
    int l_even = 0;  // AC components with even t
};

// Mixed components of g, computed through the components of the associated
// graph: a component inside the primed half is a Type I copy of the
// corresponding undirected-part component, inside the double-primed half
// Type II, and a component meeting both halves pulls back to a Type III
// submixed graph. Components are ordered by smallest associated vertex id.
Decomposition decompose(const MixedGraph& g);

// Exactly one mixed component, i.e. the associated graph is connected.
bool is_uniconnected(const MixedGraph& g);

// No odd cycle and no odd alternating cycle with an even number of arcs;
// decided through bipartiteness of the associated graph.
bool has_AB_property(const MixedGraph& g);

// Shape tests against the component's associated component; the component
// must come from decompose(g).
bool has_AP_property(const MixedComponent& c, const MixedGraph& g);
bool has_AC_property(const MixedComponent& c, const MixedGraph& g);

struct DetFormulaReport {
    mpz_class value = 0;
    int p_ac = 0;
    int q_ap = 0;
    int l_even = 0;
    std::vector<long long> t_ap;       // t over AP components, descending
    std::vector<long long> t_ac_even;  // t over even-t AC components, descending
    bool all_ap_t_odd = true;
};

// Closed-form determinant of the integrated adjacency matrix for simple
// graphs whose mixed components all have the AP or the AC property.
// Throws FormulaInapplicableError otherwise.
DetFormulaReport det_formula(const MixedGraph& g);

// Connected components of an undirected multigraph (arcs must be empty),
// as sorted vertex sets ordered by smallest member.
std::vector<std::set<Vertex>> undirected_components(const MixedGraph& g);

// Two-colorability of an undirected multigraph; loops defeat it.
bool is_bipartite(const MixedGraph& g);

}  // namespace mixspec
