#include "mixspec/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mixspec {

namespace {

int single_param(const FamilySpec& spec) {
    if (spec.params.size() != 1)
        throw std::invalid_argument("family expects a single size parameter");
    return spec.params[0];
}

// Vertices laid out part by part; relation applied to every cross pair.
MixedGraph complete_multipartite(const std::vector<int>& parts, bool with_edge, bool with_arcs) {
    if (parts.empty()) throw std::invalid_argument("at least one part required");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("part sizes must be at least 1");
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of(static_cast<size_t>(n));
    int v = 0;
    for (size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) part_of[static_cast<size_t>(v++)] = static_cast<int>(p);
    MixedGraph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (part_of[static_cast<size_t>(a)] == part_of[static_cast<size_t>(b)]) continue;
            if (with_edge) g = g.add_edge(a, b);
            if (with_arcs) g = g.add_arc(a, b).add_arc(b, a);
        }
    return g;
}

std::vector<int> ones(int n) { return std::vector<int>(static_cast<size_t>(n), 1); }

}  // namespace

MixedGraph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::CompleteGraph: {
            int n = single_param(spec);
            if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
            return complete_multipartite(ones(n), true, false);
        }
        case Family::CompleteDirected: {
            int n = single_param(spec);
            if (n < 1) throw std::invalid_argument("complete directed graph needs n >= 1");
            return complete_multipartite(ones(n), false, true);
        }
        case Family::CompleteMixed: {
            int n = single_param(spec);
            if (n < 1) throw std::invalid_argument("complete mixed graph needs n >= 1");
            return complete_multipartite(ones(n), true, true);
        }
        case Family::CompleteKPartiteMixed:
            return complete_multipartite(spec.params, true, true);
        case Family::CompleteKPartiteDirected:
            return complete_multipartite(spec.params, false, true);
        case Family::OrientedPathSame: {
            int n = single_param(spec);
            if (n < 2) throw std::invalid_argument("oriented path needs n >= 2");
            MixedGraph g(n);
            for (int i = 0; i + 1 < n; ++i) g = g.add_arc(i, i + 1);
            return g;
        }
        case Family::OrientedPathAlt: {
            int n = single_param(spec);
            if (n < 2) throw std::invalid_argument("oriented path needs n >= 2");
            MixedGraph g(n);
            for (int i = 0; i + 1 < n; ++i)
                g = (i % 2 == 0) ? g.add_arc(i, i + 1) : g.add_arc(i + 1, i);
            return g;
        }
        case Family::OrientedCycleSame: {
            int n = single_param(spec);
            if (n < 3) throw std::invalid_argument("oriented cycle needs n >= 3");
            MixedGraph g(n);
            for (int i = 0; i < n; ++i) g = g.add_arc(i, (i + 1) % n);
            return g;
        }
        case Family::OrientedCycleAlt: {
            int n = single_param(spec);
            if (n < 4 || n % 2 != 0)
                throw std::invalid_argument("alternating oriented cycle needs even n >= 4");
            MixedGraph g(n);
            for (int i = 0; i < n; ++i) {
                int j = (i + 1) % n;
                g = (i % 2 == 0) ? g.add_arc(i, j) : g.add_arc(j, i);
            }
            return g;
        }
        case Family::Path: {
            int n = single_param(spec);
            if (n < 1) throw std::invalid_argument("path needs n >= 1");
            MixedGraph g(n);
            for (int i = 0; i + 1 < n; ++i) g = g.add_edge(i, i + 1);
            return g;
        }
        case Family::Cycle: {
            int n = single_param(spec);
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            MixedGraph g(n);
            for (int i = 0; i < n; ++i) g = g.add_edge(i, (i + 1) % n);
            return g;
        }
    }
    throw std::invalid_argument("unknown family");
}

Family family_from_name(const std::string& raw) {
    std::string name = raw;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    static const std::map<std::string, Family> names = {
        {"complete", Family::CompleteGraph},
        {"k", Family::CompleteGraph},
        {"complete-directed", Family::CompleteDirected},
        {"kd", Family::CompleteDirected},
        {"complete-mixed", Family::CompleteMixed},
        {"km", Family::CompleteMixed},
        {"kpartite-mixed", Family::CompleteKPartiteMixed},
        {"kpm", Family::CompleteKPartiteMixed},
        {"kpartite-directed", Family::CompleteKPartiteDirected},
        {"kpd", Family::CompleteKPartiteDirected},
        {"oriented-path-same", Family::OrientedPathSame},
        {"ops", Family::OrientedPathSame},
        {"oriented-path-alt", Family::OrientedPathAlt},
        {"opa", Family::OrientedPathAlt},
        {"oriented-cycle-same", Family::OrientedCycleSame},
        {"ocs", Family::OrientedCycleSame},
        {"oriented-cycle-alt", Family::OrientedCycleAlt},
        {"oca", Family::OrientedCycleAlt},
        {"path", Family::Path},
        {"p", Family::Path},
        {"cycle", Family::Cycle},
        {"c", Family::Cycle},
    };
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown family name: " + raw);
    return it->second;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::CompleteGraph: return "complete";
        case Family::CompleteDirected: return "complete-directed";
        case Family::CompleteMixed: return "complete-mixed";
        case Family::CompleteKPartiteMixed: return "kpartite-mixed";
        case Family::CompleteKPartiteDirected: return "kpartite-directed";
        case Family::OrientedPathSame: return "oriented-path-same";
        case Family::OrientedPathAlt: return "oriented-path-alt";
        case Family::OrientedCycleSame: return "oriented-cycle-same";
        case Family::OrientedCycleAlt: return "oriented-cycle-alt";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
    }
    return "?";
}

MixedGraph alt_path_witness(int n) {
    if (n < 2) throw std::invalid_argument("alternating-path witness needs n >= 2");
    MixedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g = g.add_edge(i, i + 1);
    return g.add_arc(0, n - 1);
}

MixedGraph alt_cycle_odd_witness(int n) {
    if (n < 2) throw std::invalid_argument("alternating-cycle witness needs n >= 2");
    MixedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g = g.add_edge(i, i + 1);
    return g.add_dloop(0);
}

MixedGraph alt_cycle_even_witness(int n) {
    if (n < 2) throw std::invalid_argument("alternating-cycle witness needs n >= 2");
    MixedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g = g.add_edge(i, i + 1);
    return g.add_arc(0, n - 1).add_arc(n - 1, 0);
}

}  // namespace mixspec
