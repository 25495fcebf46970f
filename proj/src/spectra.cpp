#include "mixspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mixspec/components.hpp"
#include "mixspec/integrated.hpp"

namespace mixspec {

namespace {

double inf_norm(const IntMatrix& m) {
    double best = 0;
    for (int i = 0; i < m.rows(); ++i) {
        double row = 0;
        for (int j = 0; j < m.cols(); ++j) row += std::abs(m.at(i, j).get_d());
        best = std::max(best, row);
    }
    return best;
}

void require_simple(const MixedGraph& g, const char* what) {
    if (!g.is_simple()) throw std::invalid_argument(std::string(what) + " requires a simple mixed graph");
}

}  // namespace

SignCounts count_signs(const std::vector<double>& values, double center, double tol,
                       double scale) {
    SignCounts c;
    const double eps = tol * (1.0 + std::abs(center) + scale);
    for (double v : values) {
        if (v > center + eps)
            ++c.plus;
        else if (v < center - eps)
            ++c.minus;
        else
            ++c.zero;
    }
    return c;
}

SpectrumReport spectrum(const MixedGraph& g) {
    const IntegratedMatrix im = integrated_adjacency(g);
    SpectrumReport rep;
    const EigenResult eig = symmetric_eigen(im.matrix);
    rep.eigenvalues = eig.values;
    rep.clusters = cluster_eigenvalues(eig.values);
    rep.charpoly = char_poly_exact(im.matrix);
    rep.sign_tol = kClusterTol;
    const double scale = inf_norm(im.matrix);
    rep.sign_counts = count_signs(eig.values, 0.0, kClusterTol, scale);
    rep.shifted_counts = count_signs(eig.values, -2.0, kClusterTol, scale);
    return rep;
}

TraceReport check_trace_identities(const MixedGraph& g) {
    require_simple(g, "trace identity check");
    const IntegratedMatrix im = integrated_adjacency(g);
    const EigenResult eig = symmetric_eigen(im.matrix);
    TraceReport rep;
    for (double v : eig.values) {
        rep.lambda_sum += v;
        rep.lambda_sq_sum += v * v;
    }
    const Counts c = g.counts();
    rep.four_e_plus_two_a = 4 * c.edges + 2 * c.arcs;
    rep.sums_ok = std::abs(rep.lambda_sum) <= 1e-8 &&
                  std::abs(rep.lambda_sq_sum - static_cast<double>(rep.four_e_plus_two_a)) <= 1e-8;
    const CharPoly cp = char_poly_exact(im.matrix);
    rep.c2 = cp.degree() >= 2 ? cp.ck(2) : mpz_class(0);
    rep.expected_c2 = static_cast<long>(-(2 * c.edges + c.arcs));
    rep.c2_ok = rep.c2 == rep.expected_c2;
    return rep;
}

InterlacingReport check_interlacing(const MixedGraph& g, const std::set<Vertex>& vs, double tol) {
    require_simple(g, "interlacing check");
    if (vs.empty() || static_cast<int>(vs.size()) >= g.vertex_count())
        throw std::invalid_argument("interlacing needs a proper nonempty vertex subset");
    const MixedGraph h = g.induced_submixed(vs);
    const EigenResult big = symmetric_eigen(integrated_adjacency(g).matrix);
    const EigenResult small = symmetric_eigen(integrated_adjacency(h).matrix);
    const int big_dim = static_cast<int>(big.values.size());
    const int small_dim = static_cast<int>(small.values.size());

    InterlacingReport rep;
    rep.host_dim = big_dim;
    rep.sub_dim = small_dim;
    rep.pass = true;
    rep.worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < small_dim; ++i) {
        const double upper = big.values[static_cast<size_t>(i)];
        const double lower = big.values[static_cast<size_t>(i + big_dim - small_dim)];
        const double x = small.values[static_cast<size_t>(i)];
        rep.worst_slack = std::min({rep.worst_slack, upper - x, x - lower});
        if (x > upper + tol || x < lower - tol) rep.pass = false;
    }
    return rep;
}

RsRegularReport check_rs_regular(const MixedGraph& g) {
    RsRegularReport rep;
    const int n = g.vertex_count();
    if (n == 0) return rep;
    DegreeProfile first = g.degree_profile(0);
    if (first.dplus != first.dminus) return rep;
    for (Vertex v = 1; v < n; ++v) {
        DegreeProfile p = g.degree_profile(v);
        if (p.d != first.d || p.dplus != first.dplus || p.dminus != first.dminus ||
            p.dplus != p.dminus)
            return rep;
    }
    rep.regular = true;
    rep.r = first.d;
    rep.s = first.dplus;

    // Exact eigenpair identities for the all-ones and split-sign vectors.
    const IntMatrix m = integrated_adjacency(g).matrix;
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) {
        mpz_class row_sum = 0, signed_sum = 0;
        for (int j = 0; j < 2 * n; ++j) {
            row_sum += m.at(i, j);
            signed_sum += (j < n) ? m.at(i, j) : -m.at(i, j);
        }
        const int want_plain = rep.r + rep.s;
        const int want_signed = (i < n) ? rep.r - rep.s : -(rep.r - rep.s);
        ok = row_sum == want_plain && signed_sum == want_signed;
    }
    rep.eigenpairs_exact = ok;
    return rep;
}

RRegularReport check_r_regular(const MixedGraph& g) {
    RRegularReport rep;
    const int n = g.vertex_count();
    if (n == 0) return rep;
    DegreeProfile first = g.degree_profile(0);
    if (first.dplus != first.dminus) return rep;
    for (Vertex v = 0; v < n; ++v) {
        DegreeProfile p = g.degree_profile(v);
        if (p.dplus != p.dminus || p.d + p.dplus != first.d + first.dplus) return rep;
    }
    rep.regular = true;
    rep.r = first.d + first.dplus;
    if (!g.is_simple()) return rep;
    const EigenResult eig = symmetric_eigen(integrated_adjacency(g).matrix);
    rep.lambda1 = eig.values.empty() ? 0.0 : eig.values.front();
    rep.multiplicity = eigenvalue_multiplicity(eig.values, static_cast<double>(rep.r));
    rep.component_count = static_cast<int>(decompose(g).components.size());
    rep.multiplicity_matches = std::abs(rep.lambda1 - rep.r) <= 1e-8 &&
                               rep.multiplicity == rep.component_count;
    rep.applicable = true;
    return rep;
}

namespace {

MixedGraph grow_graph(const MixedGraph& g, Vertex j, VertexAdditionMode mode) {
    const int u = g.vertex_count();
    MixedGraph grown(u + 1);
    for (const auto& [key, m] : g.edges()) grown = grown.add_edge(key.first, key.second, m);
    for (const auto& [key, m] : g.arcs()) grown = grown.add_arc(key.first, key.second, m);
    for (const auto& [v, m] : g.loops()) grown = grown.add_loop(v, m);
    for (const auto& [v, m] : g.dloops()) grown = grown.add_dloop(v, m);
    switch (mode) {
        case VertexAdditionMode::ArcToNew: return grown.add_arc(j, u);
        case VertexAdditionMode::ArcFromNew: return grown.add_arc(u, j);
        case VertexAdditionMode::EdgeToNew: return grown.add_edge(j, u);
        case VertexAdditionMode::DigonWithNew: return grown.add_arc(j, u).add_arc(u, j);
        case VertexAdditionMode::ArcToNewEdge: return grown.add_arc(j, u).add_edge(j, u);
        case VertexAdditionMode::ArcFromNewEdge: return grown.add_arc(u, j).add_edge(j, u);
        case VertexAdditionMode::DigonEdge:
            return grown.add_arc(j, u).add_arc(u, j).add_edge(j, u);
    }
    throw std::invalid_argument("unknown vertex-addition mode");
}

IntPoly principal_minor_charpoly(const IntMatrix& m, int i) {
    return char_poly_exact(m.minor_matrix(i, i)).to_poly();
}

}  // namespace

VertexAdditionReport check_vertex_addition(const MixedGraph& g, Vertex j,
                                           VertexAdditionMode mode) {
    require_simple(g, "vertex-addition check");
    const int n = g.vertex_count();
    if (j < 0 || j >= n) throw std::invalid_argument("vertex id out of range");

    const MixedGraph grown = grow_graph(g, j, mode);
    const IntMatrix m = integrated_adjacency(g).matrix;

    VertexAdditionReport rep;
    rep.mode = mode;
    rep.lhs = char_poly_exact(integrated_adjacency(grown).matrix).to_poly();

    const IntPoly p = char_poly_exact(m).to_poly();
    const IntPoly x = IntPoly::monomial(1);
    const IntPoly x2 = IntPoly::monomial(2);
    const IntPoly pj = principal_minor_charpoly(m, j);
    const IntPoly pnj = principal_minor_charpoly(m, n + j);

    switch (mode) {
        case VertexAdditionMode::ArcToNew:
            rep.rhs = x2 * p - x * pj;
            rep.rhs_char_matrix = rep.rhs;
            break;
        case VertexAdditionMode::ArcFromNew:
            rep.rhs = x2 * p - x * pnj;
            rep.rhs_char_matrix = rep.rhs;
            break;
        case VertexAdditionMode::EdgeToNew:
        case VertexAdditionMode::DigonWithNew: {
            const IntPoly pdel = char_poly_exact(integrated_adjacency(g.delete_vertex(j)).matrix).to_poly();
            rep.rhs = x2 * p - x * (pj + pnj) + pdel;
            rep.rhs_char_matrix = rep.rhs;
            break;
        }
        case VertexAdditionMode::ArcToNewEdge:
        case VertexAdditionMode::ArcFromNewEdge:
        case VertexAdditionMode::DigonEdge: {
            const mpz_class sign = (n % 2 == 0) ? 1 : -1;
            // Off-diagonal minor terms under the two readings: characteristic
            // polynomials of the deleted submatrices, and minors of xI - M.
            const IntPoly lit_a = char_poly_exact(m.minor_matrix(n + j, j)).to_poly().scaled(sign);
            const IntPoly lit_b = char_poly_exact(m.minor_matrix(j, n + j)).to_poly().scaled(sign);
            const IntPoly cm_a = char_matrix_minor_poly(m, n + j, j).scaled(sign);
            const IntPoly cm_b = char_matrix_minor_poly(m, j, n + j).scaled(sign);
            IntPoly diag;
            if (mode == VertexAdditionMode::ArcToNewEdge)
                diag = pj.scaled(2) + pnj;
            else if (mode == VertexAdditionMode::ArcFromNewEdge)
                diag = pj + pnj.scaled(2);
            else
                diag = (pj + pnj).scaled(2);
            if (mode == VertexAdditionMode::DigonEdge) {
                rep.rhs = x2 * p - x.scaled(2) * (pj + pnj + lit_a + lit_b);
                rep.rhs_char_matrix = x2 * p - x.scaled(2) * (pj + pnj + cm_a + cm_b);
            } else {
                const IntPoly pdel =
                    char_poly_exact(integrated_adjacency(g.delete_vertex(j)).matrix).to_poly();
                rep.rhs = x2 * p - x * (diag + lit_a + lit_b) + pdel;
                rep.rhs_char_matrix = x2 * p - x * (diag + cm_a + cm_b) + pdel;
            }
            break;
        }
    }
    rep.equal = rep.lhs == rep.rhs;
    rep.equal_char_matrix = rep.lhs == rep.rhs_char_matrix;
    rep.difference = rep.lhs - rep.rhs;
    return rep;
}

namespace {

void push_value(std::vector<std::pair<double, int>>& out, double value, int mult) {
    if (mult <= 0) return;
    for (auto& [v, m] : out)
        if (std::abs(v - value) <= 1e-9 * (1.0 + std::abs(value))) {
            m += mult;
            return;
        }
    out.emplace_back(value, mult);
}

int kpartite_params(const std::vector<int>& params, int* k, int* m) {
    if (params.size() != 2 || params[0] < 1 || params[1] < 1)
        throw std::invalid_argument("k-partite closed form takes part count k and part size m");
    *k = params[0];
    *m = params[1];
    return 0;
}

}  // namespace

std::vector<std::pair<double, int>> closed_form_spectrum(ClosedFormFamily family,
                                                         const std::vector<int>& params) {
    auto need_n = [&](int minimum) {
        if (params.size() != 1 || params[0] < minimum)
            throw std::invalid_argument("closed form takes a single size parameter");
        return params[0];
    };
    std::vector<std::pair<double, int>> out;
    const double pi = std::numbers::pi;
    switch (family) {
        case ClosedFormFamily::CompleteGraph: {
            const int n = need_n(1);
            push_value(out, n - 1.0, 2);
            push_value(out, -1.0, 2 * (n - 1));
            break;
        }
        case ClosedFormFamily::CompleteMixed: {
            const int n = need_n(1);
            push_value(out, 2.0 * (n - 1), 1);
            push_value(out, -2.0, n - 1);
            push_value(out, 0.0, n);
            break;
        }
        case ClosedFormFamily::CompleteDirected: {
            const int n = need_n(1);
            push_value(out, n - 1.0, 1);
            push_value(out, 1.0, n - 1);
            push_value(out, -1.0, n - 1);
            push_value(out, -(n - 1.0), 1);
            break;
        }
        case ClosedFormFamily::CompleteKPartiteMixed: {
            int k, m;
            kpartite_params(params, &k, &m);
            push_value(out, 2.0 * m * (k - 1), 1);
            push_value(out, -2.0 * m, k - 1);
            push_value(out, 0.0, (2 * m - 1) * k);
            break;
        }
        case ClosedFormFamily::CompleteKPartiteDirected: {
            int k, m;
            kpartite_params(params, &k, &m);
            push_value(out, static_cast<double>(m) * (k - 1), 1);
            push_value(out, static_cast<double>(m), k - 1);
            push_value(out, -static_cast<double>(m), k - 1);
            push_value(out, -static_cast<double>(m) * (k - 1), 1);
            push_value(out, 0.0, 2 * k * (m - 1));
            break;
        }
        case ClosedFormFamily::OrientedPathSame: {
            const int n = need_n(2);
            push_value(out, 1.0, n - 1);
            push_value(out, -1.0, n - 1);
            push_value(out, 0.0, 2);
            break;
        }
        case ClosedFormFamily::OrientedPathAlt: {
            const int n = need_n(2);
            push_value(out, 0.0, n);
            for (int k = 1; k <= n; ++k) push_value(out, 2.0 * std::cos(pi * k / (n + 1)), 1);
            break;
        }
        case ClosedFormFamily::OrientedCycleSame: {
            const int n = need_n(3);
            push_value(out, 1.0, n);
            push_value(out, -1.0, n);
            break;
        }
        case ClosedFormFamily::OrientedCycleAlt: {
            const int n = need_n(4);
            if (n % 2 != 0) throw std::invalid_argument("alternating oriented cycle needs even n");
            push_value(out, 0.0, n);
            for (int k = 1; k <= n; ++k) push_value(out, 2.0 * std::cos(2.0 * pi * k / n), 1);
            break;
        }
        case ClosedFormFamily::Path: {
            const int n = need_n(1);
            for (int k = 1; k <= n; ++k) push_value(out, 2.0 * std::cos(pi * k / (n + 1)), 2);
            break;
        }
        case ClosedFormFamily::Cycle: {
            const int n = need_n(3);
            for (int k = 1; k <= n; ++k) push_value(out, 2.0 * std::cos(2.0 * pi * k / n), 2);
            break;
        }
        case ClosedFormFamily::UniconnectedAltPath:
        case ClosedFormFamily::UniconnectedAltCycleOdd: {
            const int n = need_n(2);
            for (int k = 1; k <= 2 * n; ++k) push_value(out, 2.0 * std::cos(pi * k / (2 * n + 1)), 1);
            break;
        }
        case ClosedFormFamily::UniconnectedAltCycleEven: {
            const int n = need_n(2);
            for (int k = 1; k <= 2 * n; ++k) push_value(out, 2.0 * std::cos(pi * k / n), 1);
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

PerronReport check_perron(const MixedGraph& g) {
    require_simple(g, "the spectral connectivity check");
    PerronReport rep;
    rep.uniconnected = is_uniconnected(g);
    if (g.vertex_count() == 0) {
        rep.simple_positive = false;
        rep.equivalence_holds = rep.uniconnected == rep.simple_positive;
        return rep;
    }
    const EigenResult eig = symmetric_eigen(integrated_adjacency(g).matrix);
    rep.lambda1 = eig.values.front();
    rep.multiplicity = eigenvalue_multiplicity(eig.values, rep.lambda1);
    const std::vector<double>& vec = eig.vectors.front();
    double max_abs = 0;
    for (double x : vec) max_abs = std::max(max_abs, std::abs(x));
    rep.min_entry = std::numeric_limits<double>::infinity();
    for (double x : vec) rep.min_entry = std::min(rep.min_entry, x / max_abs);
    rep.simple_positive = rep.multiplicity == 1 && rep.min_entry > 1e-8;
    rep.equivalence_holds = rep.uniconnected == rep.simple_positive;
    return rep;
}

}  // namespace mixspec
