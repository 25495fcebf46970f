#include "mixspec/walks.hpp"

#include <map>
#include <stdexcept>

#include "mixspec/errors.hpp"

namespace mixspec {

bool Walk::well_formed() const {
    Vertex at = start;
    for (const WalkStep& s : steps) {
        if (s.from != at) return false;
        at = s.to;
    }
    return true;
}

namespace {

bool arc_forwardness(const WalkStep& s) { return s.kind == StepKind::ArcForward; }

// Extracts the traversal directions of the arcs, in walk order.
std::vector<bool> arc_directions(const Walk& w) {
    std::vector<bool> dirs;
    for (const WalkStep& s : w.steps)
        if (s.kind != StepKind::Edge) dirs.push_back(arc_forwardness(s));
    return dirs;
}

bool directions_alternate(const std::vector<bool>& dirs) {
    for (size_t i = 1; i < dirs.size(); ++i)
        if (dirs[i] == dirs[i - 1]) return false;
    return true;
}

}  // namespace

bool is_alternating(const Walk& w) {
    if (!w.well_formed()) throw std::invalid_argument("walk is not well formed");
    const std::vector<bool> dirs = arc_directions(w);
    return !dirs.empty() && directions_alternate(dirs);
}

WalkClass classify(const Walk& w) {
    if (!w.well_formed()) throw std::invalid_argument("walk is not well formed");
    const std::vector<bool> dirs = arc_directions(w);
    if (dirs.empty()) return WalkClass::NoArc;
    if (!directions_alternate(dirs))
        throw std::invalid_argument("walk's arc directions do not alternate");
    const bool even = dirs.size() % 2 == 0;
    if (dirs.front())
        return even ? WalkClass::EvenArcsFirstForward : WalkClass::OddArcsFirstForward;
    return even ? WalkClass::EvenArcsFirstBackward : WalkClass::OddArcsFirstBackward;
}

WalkClassCounts count_classified(const MixedGraph& g, Vertex i, Vertex j, int k,
                                 std::int64_t budget) {
    if (!g.is_simple())
        throw std::invalid_argument("walk enumeration is defined for simple mixed graphs");
    if (i < 0 || i >= g.vertex_count() || j < 0 || j >= g.vertex_count())
        throw std::invalid_argument("walk endpoint out of range");
    if (k < 0) throw std::invalid_argument("walk length must be nonnegative");

    // Adjacency snapshots for the three traversal moves.
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> by_edge(static_cast<size_t>(n));
    std::vector<std::vector<Vertex>> by_arc_out(static_cast<size_t>(n));
    std::vector<std::vector<Vertex>> by_arc_in(static_cast<size_t>(n));
    for (const auto& [key, m] : g.edges()) {
        by_edge[static_cast<size_t>(key.first)].push_back(key.second);
        by_edge[static_cast<size_t>(key.second)].push_back(key.first);
    }
    for (const auto& [key, m] : g.arcs()) {
        by_arc_out[static_cast<size_t>(key.first)].push_back(key.second);
        by_arc_in[static_cast<size_t>(key.second)].push_back(key.first);
    }

    WalkClassCounts counts;
    std::int64_t visited = 0;

    // lastdir: 0 = no arc so far, 1 = last arc forward, 2 = last arc backward.
    // firstdir records the first arc's direction the same way.
    auto record = [&](int arcs, int firstdir) {
        if (arcs == 0) {
            ++counts.no_arc;
        } else if (firstdir == 1) {
            (arcs % 2 == 0 ? counts.even_first_forward : counts.odd_first_forward) += 1;
        } else {
            (arcs % 2 == 0 ? counts.even_first_backward : counts.odd_first_backward) += 1;
        }
    };

    auto dfs = [&](auto&& self, Vertex at, int remaining, int arcs, int firstdir,
                   int lastdir) -> void {
        if (remaining == 0) {
            if (at == j) record(arcs, firstdir);
            return;
        }
        if (++visited > budget)
            throw ResourceLimitError("walk enumeration exceeded its extension budget");
        for (Vertex next : by_edge[static_cast<size_t>(at)])
            self(self, next, remaining - 1, arcs, firstdir, lastdir);
        if (lastdir != 1)
            for (Vertex next : by_arc_out[static_cast<size_t>(at)])
                self(self, next, remaining - 1, arcs + 1, firstdir == 0 ? 1 : firstdir, 1);
        if (lastdir != 2)
            for (Vertex next : by_arc_in[static_cast<size_t>(at)])
                self(self, next, remaining - 1, arcs + 1, firstdir == 0 ? 2 : firstdir, 2);
    };
    dfs(dfs, i, k, 0, 0, 0);
    return counts;
}

namespace {

// Arc count of steps[lo..hi] (inclusive bounds, clamped).
int arcs_in_range(const Walk& w, int lo, int hi) {
    int count = 0;
    for (int t = lo; t <= hi; ++t)
        if (w.steps[static_cast<size_t>(t)].kind != StepKind::Edge) ++count;
    return count;
}

bool vertex_conditions(const Walk& w) {
    // Vertex positions 0..k; position p>0 is steps[p-1].to.
    std::map<Vertex, std::vector<int>> seen;
    seen[w.start].push_back(0);
    for (int p = 0; p < w.length(); ++p) seen[w.steps[static_cast<size_t>(p)].to].push_back(p + 1);
    for (const auto& [v, positions] : seen) {
        if (positions.size() > 2) return false;
        if (positions.size() == 2) {
            // Elements between vertex positions p1 < p2 are steps[p1..p2-1].
            if (arcs_in_range(w, positions[0], positions[1] - 1) % 2 == 0) return false;
        }
    }
    return true;
}

bool edge_and_arc_conditions(const Walk& w) {
    std::map<VertexPair, std::vector<int>> edge_at;
    std::map<VertexPair, int> arc_uses;
    for (int t = 0; t < w.length(); ++t) {
        const WalkStep& s = w.steps[static_cast<size_t>(t)];
        if (s.kind == StepKind::Edge)
            edge_at[s.edge_key()].push_back(t);
        else
            ++arc_uses[s.arc_key()];
    }
    for (const auto& [key, uses] : arc_uses)
        if (uses != 1) return false;
    for (const auto& [key, positions] : edge_at) {
        if (positions.size() > 2) return false;
        if (positions.size() == 2) {
            // Elements strictly between the two edge occurrences.
            if (arcs_in_range(w, positions[0] + 1, positions[1] - 1) % 2 == 0) return false;
        }
    }
    return true;
}

}  // namespace

bool is_alternating_path(const Walk& w) {
    if (!is_alternating(w)) throw std::invalid_argument("not an alternating walk");
    return vertex_conditions(w) && edge_and_arc_conditions(w);
}

bool is_alternating_cycle(const Walk& w) {
    if (!is_alternating(w)) throw std::invalid_argument("not an alternating walk");
    return w.closed() && edge_and_arc_conditions(w);
}

}  // namespace mixspec
