#pragma once

#include <string>
#include <vector>

#include "mixspec/mixed_graph.hpp"

namespace mixspec {

enum class Family {
    CompleteGraph,
    CompleteDirected,
    CompleteMixed,
    CompleteKPartiteMixed,
    CompleteKPartiteDirected,
    OrientedPathSame,
    OrientedPathAlt,
    OrientedCycleSame,
    OrientedCycleAlt,
    Path,
    Cycle,
};

struct FamilySpec {
    Family family;
    // Part sizes for the k-partite families; a single entry n otherwise.
    std::vector<int> params;
};

// The named graph on the natural vertex order. Invalid parameters (empty
// parts, too-short paths or cycles, an odd alternating cycle) are a domain
// error.
MixedGraph generate(const FamilySpec& spec);

// Name <-> enum for the CLI layer. Accepts the long kebab-case names and the
// short aliases (km, kd, k, kpm, kpd, ops, opa, ocs, oca, p, c).
Family family_from_name(const std::string& name);
std::string family_name(Family f);

// Uniconnected witness shapes used by the closed-form spectrum checks: a
// path with one extra arc (associated graph a path on 2n vertices), a path
// with a directed loop at one end (same associated shape reached by a closed
// alternating walk with oddly many arcs), and a path with a digon across the
// ends (associated graph a cycle on 2n vertices).
MixedGraph alt_path_witness(int n);        // n >= 2
MixedGraph alt_cycle_odd_witness(int n);   // n >= 2, contains a directed loop
MixedGraph alt_cycle_even_witness(int n);  // n >= 2

}  // namespace mixspec
