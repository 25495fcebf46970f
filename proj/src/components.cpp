#include "mixspec/components.hpp"

#include <algorithm>
#include <stdexcept>

#include "mixspec/errors.hpp"

namespace mixspec {

std::vector<std::set<Vertex>> undirected_components(const MixedGraph& g) {
    if (!g.arcs().empty() || !g.dloops().empty())
        throw std::invalid_argument("component search expects an undirected graph");
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(n));
    for (const auto& [key, m] : g.edges()) {
        adj[static_cast<size_t>(key.first)].push_back(key.second);
        adj[static_cast<size_t>(key.second)].push_back(key.first);
    }
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<std::set<Vertex>> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::set<Vertex> comp;
        std::vector<Vertex> stack = {s};
        seen[static_cast<size_t>(s)] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (Vertex w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_bipartite(const MixedGraph& g) {
    if (!g.arcs().empty() || !g.dloops().empty())
        throw std::invalid_argument("bipartiteness expects an undirected graph");
    if (!g.loops().empty()) return false;  // a loop is an odd closed walk
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(n));
    for (const auto& [key, m] : g.edges()) {
        adj[static_cast<size_t>(key.first)].push_back(key.second);
        adj[static_cast<size_t>(key.second)].push_back(key.first);
    }
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::vector<Vertex> stack = {s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Degree within an induced piece of an undirected multigraph, loops twice.
long long degree_in(const MixedGraph& g, const std::set<Vertex>& comp, Vertex v) {
    long long d = 0;
    for (const auto& [key, m] : g.edges()) {
        if (key.first == v && comp.count(key.second)) d += m;
        if (key.second == v && comp.count(key.first)) d += m;
    }
    auto it = g.loops().find(v);
    if (it != g.loops().end()) d += 2LL * it->second;
    return d;
}

bool component_has_loop(const MixedGraph& g, const std::set<Vertex>& comp) {
    for (const auto& [v, m] : g.loops())
        if (comp.count(v)) return true;
    return false;
}

long long component_edge_count(const MixedGraph& g, const std::set<Vertex>& comp) {
    long long e = 0;
    for (const auto& [key, m] : g.edges())
        if (comp.count(key.first)) e += m;
    return e;
}

// Path shape: no loops, acyclic, max degree two. A single vertex counts.
bool component_is_path(const MixedGraph& g, const std::set<Vertex>& comp) {
    if (component_has_loop(g, comp)) return false;
    if (component_edge_count(g, comp) != static_cast<long long>(comp.size()) - 1) return false;
    for (Vertex v : comp)
        if (degree_in(g, comp, v) > 2) return false;
    return true;
}

// Cycle shape: no loops, connected, every degree exactly two.
bool component_is_cycle(const MixedGraph& g, const std::set<Vertex>& comp) {
    if (component_has_loop(g, comp)) return false;
    if (component_edge_count(g, comp) != static_cast<long long>(comp.size())) return false;
    for (Vertex v : comp)
        if (degree_in(g, comp, v) != 2) return false;
    return true;
}

}  // namespace

Decomposition decompose(const MixedGraph& g) {
    const AssociatedGraph assoc = associated_graph(g);
    const IndexMap& idx = assoc.labels;
    const std::vector<std::set<int>> assoc_comps = undirected_components(assoc.base);

    Decomposition out;
    for (const std::set<int>& comp : assoc_comps) {
        MixedComponent mc;
        mc.assoc_component = comp;

        bool any_prime = false, any_dprime = false;
        std::set<Vertex> primes, dprimes;
        for (int id : comp) {
            if (idx.is_prime(id)) {
                any_prime = true;
                primes.insert(idx.vertex_of(id));
            } else {
                any_dprime = true;
                dprimes.insert(idx.vertex_of(id));
            }
        }
        mc.ctype = any_prime && any_dprime ? ComponentType::TypeIII
                   : any_prime             ? ComponentType::TypeI
                                           : ComponentType::TypeII;
        mc.vertices = primes;
        mc.vertices.insert(dprimes.begin(), dprimes.end());
        std::set_intersection(primes.begin(), primes.end(), dprimes.begin(), dprimes.end(),
                              std::inserter(mc.theta, mc.theta.begin()));

        for (const auto& [key, m] : g.edges()) {
            const bool in_prime = primes.count(key.first) > 0;
            const bool in_dprime = dprimes.count(key.first) > 0;
            if (in_prime || in_dprime) mc.edges[key] = m;
            if (in_prime && in_dprime) mc.omega[key] = m;
        }
        for (const auto& [v, m] : g.loops())
            if (primes.count(v) || dprimes.count(v)) mc.loops[v] = m;
        for (const auto& [key, m] : g.arcs())
            if (comp.count(idx.prime(key.first)) && comp.count(idx.dprime(key.second)))
                mc.arcs[key] = m;
        for (const auto& [v, m] : g.dloops())
            if (comp.count(idx.prime(v))) mc.dloops[v] = m;

        long long edge_total = 0, omega_total = 0, arc_total = 0;
        for (const auto& [key, m] : mc.edges) edge_total += m;
        for (const auto& [key, m] : mc.omega) omega_total += m;
        for (const auto& [key, m] : mc.arcs) arc_total += m;
        for (const auto& [v, m] : mc.dloops) arc_total += m;
        mc.t = edge_total + omega_total + arc_total;

        mc.is_ap = component_is_path(assoc.base, comp);
        mc.is_ac = component_is_cycle(assoc.base, comp);

        if (mc.is_ac) {
            ++out.p_ac;
            if (mc.t_even()) ++out.l_even;
        }
        if (mc.is_ap) ++out.q_ap;
        out.components.push_back(std::move(mc));
    }
    return out;
}

bool is_uniconnected(const MixedGraph& g) {
    return undirected_components(associated_graph(g).base).size() == 1;
}

bool has_AB_property(const MixedGraph& g) { return is_bipartite(associated_graph(g).base); }

namespace {

const MixedComponent& validate_component(const MixedComponent& c, const MixedGraph& g) {
    for (const MixedComponent& own : decompose(g).components)
        if (own.assoc_component == c.assoc_component && own.vertices == c.vertices &&
            own.edges == c.edges && own.arcs == c.arcs && own.loops == c.loops &&
            own.dloops == c.dloops)
            return c;
    throw std::invalid_argument("component does not belong to the given graph");
}

}  // namespace

bool has_AP_property(const MixedComponent& c, const MixedGraph& g) {
    return validate_component(c, g).is_ap;
}

bool has_AC_property(const MixedComponent& c, const MixedGraph& g) {
    return validate_component(c, g).is_ac;
}

DetFormulaReport det_formula(const MixedGraph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("determinant formula requires a simple mixed graph");
    const Decomposition dec = decompose(g);

    DetFormulaReport rep;
    rep.p_ac = dec.p_ac;
    rep.q_ap = dec.q_ap;
    rep.l_even = dec.l_even;

    std::vector<long long> t_ac_even;
    for (const MixedComponent& c : dec.components) {
        if (!c.is_ap && !c.is_ac)
            throw FormulaInapplicableError(
                "formula inapplicable: a mixed component has neither the AP nor the AC property");
        if (c.is_ac) {
            if (c.t_even()) t_ac_even.push_back(c.t);
        } else {
            rep.t_ap.push_back(c.t);
            if (c.t % 2 == 0) rep.all_ap_t_odd = false;
        }
    }
    std::sort(rep.t_ap.rbegin(), rep.t_ap.rend());
    std::sort(t_ac_even.rbegin(), t_ac_even.rend());
    rep.t_ac_even = t_ac_even;

    if (!rep.all_ap_t_odd) {
        rep.value = 0;
        return rep;
    }

    const long long n = g.vertex_count();
    long long exponent = 2 * n - rep.p_ac;
    for (long long t : rep.t_ap) exponent -= (t + 1) / 2;

    mpz_class subset_sum = 0;
    const size_t l = t_ac_even.size();
    for (size_t mask = 0; mask < (size_t{1} << l); ++mask) {
        long long e = 0;
        for (size_t i = 0; i < l; ++i)
            if (mask & (size_t{1} << i)) e += 1 - t_ac_even[i] / 2;
        subset_sum += (((e % 2) + 2) % 2 == 0) ? 1 : -1;
    }

    mpz_class value;
    mpz_ui_pow_ui(value.get_mpz_t(), 2, static_cast<unsigned long>(rep.p_ac));
    if (exponent % 2 != 0) value = -value;
    rep.value = value * subset_sum;
    return rep;
}

}  // namespace mixspec
