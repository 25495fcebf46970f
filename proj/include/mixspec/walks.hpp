#pragma once

#include <cstdint>
#include <vector>

#include "mixspec/mixed_graph.hpp"

namespace mixspec {

enum class StepKind {
    Edge,         // undirected edge or loop
    ArcForward,   // arc traversed tail -> head
    ArcBackward,  // arc traversed head -> tail
};

struct WalkStep {
    StepKind kind;
    Vertex from;  // vertex the walk stands on before the step
    Vertex to;    // vertex after the step

    // Identity of the graph element used by the step.
    VertexPair edge_key() const { return from < to ? VertexPair{from, to} : VertexPair{to, from}; }
    VertexPair arc_key() const {
        return kind == StepKind::ArcForward ? VertexPair{from, to} : VertexPair{to, from};
    }
    bool operator==(const WalkStep&) const = default;
};

struct Walk {
    Vertex start = 0;
    std::vector<WalkStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
    Vertex end() const { return steps.empty() ? start : steps.back().to; }
    bool closed() const { return start == end(); }
    // Consecutive incidence of the step sequence.
    bool well_formed() const;
};

// Arc-class of a walk: parity of the arc count together with the traversal
// direction of the first arc. Walks with no arcs fall into NoArc.
enum class WalkClass {
    NoArc,
    EvenArcsFirstForward,
    OddArcsFirstForward,
    OddArcsFirstBackward,
    EvenArcsFirstBackward,
};

// True iff the walk has at least one arc and the traversal directions of its
// arcs strictly alternate.
bool is_alternating(const Walk& w);

// Class of an accepted walk (pure-edge or alternating); throws on a walk
// whose arcs do not alternate.
WalkClass classify(const Walk& w);

struct WalkClassCounts {
    std::int64_t no_arc = 0;
    std::int64_t even_first_forward = 0;
    std::int64_t odd_first_forward = 0;
    std::int64_t odd_first_backward = 0;
    std::int64_t even_first_backward = 0;

    std::int64_t total() const {
        return no_arc + even_first_forward + odd_first_forward + odd_first_backward +
               even_first_backward;
    }
    bool operator==(const WalkClassCounts&) const = default;
};

inline constexpr std::int64_t kDefaultWalkBudget = 10'000'000;

// Exhaustive enumeration of the walks of length k from i to j that are
// either pure-edge walks or alternating walks, bucketed by class. Requires a
// simple graph; throws ResourceLimitError past the extension budget.
WalkClassCounts count_classified(const MixedGraph& g, Vertex i, Vertex j, int k,
                                 std::int64_t budget = kDefaultWalkBudget);

// Alternating-path conditions: every vertex at most twice with an odd number
// of arcs between repeat occurrences, every edge likewise, every arc used at
// most once. Input must be alternating.
bool is_alternating_path(const Walk& w);

// Alternating-cycle conditions: the edge and arc restrictions above plus
// closed endpoints. Input must be alternating.
bool is_alternating_cycle(const Walk& w);

}  // namespace mixspec
