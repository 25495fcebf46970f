#include "mixspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mixspec/components.hpp"
#include "mixspec/integrated.hpp"

namespace mixspec {

namespace {

void require_simple(const MixedGraph& g, const char* what) {
    if (!g.is_simple()) throw std::invalid_argument(std::string(what) + " requires a simple mixed graph");
}

double scale_of(const IntMatrix& m) {
    double best = 0;
    for (int i = 0; i < m.rows(); ++i) {
        double row = 0;
        for (int j = 0; j < m.cols(); ++j) row += std::abs(m.at(i, j).get_d());
        best = std::max(best, row);
    }
    return best;
}

// Adjacency bitmasks: mask_adj[v] has bit w set when v and w are joined by
// an edge or an arc in either direction.
std::vector<unsigned> adjacency_masks(const MixedGraph& g) {
    const int n = g.vertex_count();
    std::vector<unsigned> mask(static_cast<size_t>(n), 0);
    auto join = [&](Vertex a, Vertex b) {
        mask[static_cast<size_t>(a)] |= 1u << b;
        mask[static_cast<size_t>(b)] |= 1u << a;
    };
    for (const auto& [key, m] : g.edges()) join(key.first, key.second);
    for (const auto& [key, m] : g.arcs()) join(key.first, key.second);
    return mask;
}

}  // namespace

BoundsReport degree_bounds(const MixedGraph& g) {
    require_simple(g, "degree bounds");
    const int n = g.vertex_count();
    BoundsReport rep;
    if (n == 0) return rep;

    rep.sdelta1 = rep.sdelta2 = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n; ++v) {
        const DegreeProfile p = g.degree_profile(v);
        rep.delta1 = std::max(rep.delta1, p.d + p.dplus);
        rep.delta2 = std::max(rep.delta2, p.d + p.dminus);
        rep.sdelta1 = std::min(rep.sdelta1, p.d + p.dplus);
        rep.sdelta2 = std::min(rep.sdelta2, p.d + p.dminus);
    }

    const IntegratedMatrix im = integrated_adjacency(g);
    const EigenResult eig = symmetric_eigen(im.matrix);
    const int dim = static_cast<int>(eig.values.size());
    rep.lambda1 = eig.values.front();
    rep.lambda2 = dim > 1 ? eig.values[1] : rep.lambda1;
    rep.lambda_last = eig.values.back();
    rep.lambda_second_last = dim > 1 ? eig.values[static_cast<size_t>(dim - 2)] : rep.lambda_last;

    const double dmax = std::max(rep.delta1, rep.delta2);
    double abs_max = 0;
    for (double v : eig.values) abs_max = std::max(abs_max, std::abs(v));
    rep.checks.push_back({"abs(lambda) <= max(Delta1,Delta2)", abs_max, dmax});
    rep.checks.push_back({"min(delta1,delta2) <= (delta1+delta2)/2",
                          static_cast<double>(std::min(rep.sdelta1, rep.sdelta2)),
                          (rep.sdelta1 + rep.sdelta2) / 2.0});
    rep.checks.push_back({"(delta1+delta2)/2 <= lambda1", (rep.sdelta1 + rep.sdelta2) / 2.0,
                          rep.lambda1});
    rep.checks.push_back({"lambda1 <= max(Delta1,Delta2)", rep.lambda1, dmax});

    const Counts c = g.counts();
    const double mean_plus = (2.0 * c.edges + c.arcs) / n;
    const double mean_minus = (2.0 * c.edges - c.arcs) / n;
    rep.checks.push_back({"lambda_{2n-1} <= (2e+a)/n", rep.lambda_second_last, mean_plus});
    rep.checks.push_back({"(2e+a)/n <= lambda1", mean_plus, rep.lambda1});
    rep.checks.push_back({"lambda_{2n} <= (2e-a)/n", rep.lambda_last, mean_minus});
    rep.checks.push_back({"(2e-a)/n <= lambda2", mean_minus, rep.lambda2});
    rep.checks.push_back({"lambda1 <= sqrt((2n-1)(2e+a)/n)", rep.lambda1,
                          std::sqrt((2.0 * n - 1) * (2.0 * c.edges + c.arcs) / n)});

    // Undirected-part comparison: lambda1 + lambda_2n <= 2 lambda1(G_u).
    MixedGraph gu(n);
    for (const auto& [key, m] : g.edges()) gu = gu.add_edge(key.first, key.second, m);
    IntMatrix au(n, n);
    for (const auto& [key, m] : gu.edges()) {
        au.at(key.first, key.second) = m;
        au.at(key.second, key.first) = m;
    }
    const EigenResult eu = symmetric_eigen(au);
    rep.checks.push_back({"lambda1 + lambda_{2n} <= 2 lambda1(G_u)",
                          rep.lambda1 + rep.lambda_last, 2.0 * eu.values.front()});
    return rep;
}

DeletionReport deletion_monotonicity(const MixedGraph& g) {
    if (!associated_graph(g).base.is_simple())
        throw std::invalid_argument("deletion monotonicity requires a simple associated graph");
    if (!is_uniconnected(g))
        throw std::invalid_argument("deletion monotonicity requires a uniconnected graph");

    DeletionReport rep;
    const EigenResult eig = symmetric_eigen(integrated_adjacency(g).matrix);
    rep.lambda1 = eig.values.front();

    auto lambda1_of = [](const MixedGraph& h) {
        if (h.vertex_count() == 0) return 0.0;
        return symmetric_eigen(integrated_adjacency(h).matrix).values.front();
    };

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        DeletionEntry e;
        e.is_vertex = true;
        e.u = v;
        e.lambda1_after = lambda1_of(g.delete_vertex(v));
        e.margin = rep.lambda1 - e.lambda1_after;
        rep.all_strict = rep.all_strict && e.margin > 0;
        rep.entries.push_back(e);
    }
    for (const auto& [key, m] : g.arcs()) {
        DeletionEntry e;
        e.u = key.first;
        e.v = key.second;
        e.lambda1_after = lambda1_of(g.delete_arc(key.first, key.second));
        e.margin = rep.lambda1 - e.lambda1_after;
        rep.all_strict = rep.all_strict && e.margin > 0;
        rep.entries.push_back(e);
    }
    for (const auto& [v, m] : g.dloops()) {
        DeletionEntry e;
        e.u = e.v = v;
        e.lambda1_after = lambda1_of(g.delete_dloop(v));
        e.margin = rep.lambda1 - e.lambda1_after;
        rep.all_strict = rep.all_strict && e.margin > 0;
        rep.entries.push_back(e);
    }
    return rep;
}

RegularSubgraphReport regular_subgraph_bound(const MixedGraph& g, const std::set<Vertex>& vs) {
    require_simple(g, "the regular-subgraph bound");
    const RRegularReport reg = check_r_regular(g);
    if (!reg.regular) throw std::invalid_argument("the regular-subgraph bound requires an r-regular graph");
    const int n = g.vertex_count();
    if (vs.empty() || static_cast<int>(vs.size()) >= n)
        throw std::invalid_argument("the regular-subgraph bound needs a proper nonempty subset");

    RegularSubgraphReport rep;
    rep.r = reg.r;
    rep.sub_size = static_cast<int>(vs.size());
    const MixedGraph sub = g.induced_submixed(vs);
    long long acc = 0;
    for (Vertex v = 0; v < sub.vertex_count(); ++v) {
        const DegreeProfile p = sub.degree_profile(v);
        acc += 2LL * p.d + p.dplus + p.dminus;
    }
    rep.average_degree = static_cast<double>(acc) / (2.0 * rep.sub_size);
    rep.quotient = (n * rep.average_degree - static_cast<double>(rep.r) * rep.sub_size) /
                   (n - rep.sub_size);

    const EigenResult eig = symmetric_eigen(integrated_adjacency(g).matrix);
    rep.lambda2 = eig.values.size() > 1 ? eig.values[1] : eig.values.front();
    rep.lambda_last = eig.values.back();
    rep.pass = rep.lambda_last <= rep.quotient + 1e-8 && rep.quotient <= rep.lambda2 + 1e-8;
    return rep;
}

std::optional<int> independence_number(const MixedGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap || n > 31) return std::nullopt;
    const std::vector<unsigned> mask = adjacency_masks(g);
    int best = 0;
    // Depth-first over vertices in id order with a remaining-count prune.
    auto dfs = [&](auto&& self, int v, unsigned banned, int size) -> void {
        if (size + (n - v) <= best) return;
        if (v == n) {
            best = std::max(best, size);
            return;
        }
        if (!(banned & (1u << v)))
            self(self, v + 1, banned | mask[static_cast<size_t>(v)], size + 1);
        self(self, v + 1, banned, size);
    };
    dfs(dfs, 0, 0, 0);
    return best;
}

std::optional<int> clique_number(const MixedGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap || n > 31) return std::nullopt;
    // Complete submixed adjacency: edge plus both arcs.
    std::vector<unsigned> mask(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.edge_multiplicity(a, b) >= 1 && g.arc_multiplicity(a, b) >= 1 &&
                g.arc_multiplicity(b, a) >= 1) {
                mask[static_cast<size_t>(a)] |= 1u << b;
                mask[static_cast<size_t>(b)] |= 1u << a;
            }
    int best = n > 0 ? 1 : 0;
    auto dfs = [&](auto&& self, int v, unsigned allowed, int size) -> void {
        if (size + (n - v) <= best) return;
        if (v == n) {
            best = std::max(best, size);
            return;
        }
        if (allowed & (1u << v))
            self(self, v + 1, allowed & mask[static_cast<size_t>(v)], size + 1);
        self(self, v + 1, allowed, size);
    };
    dfs(dfs, 0, n > 0 ? (n >= 31 ? ~0u : ((1u << n) - 1)) : 0, 0);
    return best;
}

IndependenceReport independence_bounds(const MixedGraph& g, int cap) {
    require_simple(g, "independence bounds");
    const int n = g.vertex_count();
    IndependenceReport rep;
    const IntegratedMatrix im = integrated_adjacency(g);
    const EigenResult eig = symmetric_eigen(im.matrix);
    rep.sign_counts = count_signs(eig.values, 0.0, kClusterTol, scale_of(im.matrix));
    rep.bound_sign_counts = std::min((2.0 * n - rep.sign_counts.plus) / 2.0,
                                     (2.0 * n - rep.sign_counts.minus) / 2.0);

    const RRegularReport reg = check_r_regular(g);
    if (n > 0 && reg.regular) {
        const double lam_last = eig.values.back();
        if (reg.r - lam_last > 1e-9)
            rep.bound_regular = -n * lam_last / (reg.r - lam_last);
    }

    rep.alpha = independence_number(g, cap);
    rep.capped = !rep.alpha.has_value();
    if (rep.alpha) {
        rep.pass = *rep.alpha <= rep.bound_sign_counts + 1e-8;
        if (rep.bound_regular) rep.pass = rep.pass && *rep.alpha <= *rep.bound_regular + 1e-8;
    }
    return rep;
}

CliqueReport clique_bound(const MixedGraph& g, int cap) {
    require_simple(g, "the clique bound");
    const int n = g.vertex_count();
    CliqueReport rep;
    if (n == 0) {
        rep.omega = 0;
        return rep;
    }
    const IntegratedMatrix im = integrated_adjacency(g);
    const EigenResult eig = symmetric_eigen(im.matrix);
    const double scale = scale_of(im.matrix);
    rep.p_counts = count_signs(eig.values, 0.0, kClusterTol, scale);
    rep.q_counts = count_signs(eig.values, -2.0, kClusterTol, scale);
    const double lambda1 = eig.values.front();
    rep.s = std::min({1.0 + lambda1 / 2.0,
                      (rep.p_counts.zero + rep.p_counts.minus + 1) / 2.0,
                      static_cast<double>(rep.p_counts.zero + rep.p_counts.plus - 1),
                      static_cast<double>(rep.q_counts.zero + rep.q_counts.minus + 1),
                      (rep.q_counts.zero + rep.q_counts.plus) / 2.0});
    rep.omega = clique_number(g, cap);
    rep.capped = !rep.omega.has_value();
    if (rep.omega) rep.pass = *rep.omega <= rep.s + 1e-8;
    return rep;
}

}  // namespace mixspec
