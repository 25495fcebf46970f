#include "mixspec/reports.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "mixspec/integrated.hpp"

namespace mixspec {

using nlohmann::json;

double round_real(double v) {
    if (!std::isfinite(v)) return v;
    if (std::abs(v) < 1e-10) return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

namespace {

json reals(const std::vector<double>& vs) {
    json arr = json::array();
    for (double v : vs) arr.push_back(round_real(v));
    return arr;
}

json charpoly_json(const CharPoly& cp) {
    json arr = json::array();
    for (const mpz_class& c : cp.coeffs) arr.push_back(c.get_str());
    return arr;
}

json sign_counts_json(const SignCounts& c) {
    return json{{"positive", c.plus}, {"zero", c.zero}, {"negative", c.minus}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string spectrum_report_json(const MixedGraph& g, bool include_charpoly) {
    const SpectrumReport rep = spectrum(g);
    json j;
    j["schema"] = "mixspec.spectrum/1";
    j["n"] = g.vertex_count();
    j["eigenvalues"] = reals(rep.eigenvalues);
    json clusters = json::array();
    for (const EigenCluster& c : rep.clusters)
        clusters.push_back(json{{"value", round_real(c.value)}, {"multiplicity", c.multiplicity}});
    j["clusters"] = clusters;
    j["sign_counts"] = sign_counts_json(rep.sign_counts);
    j["shifted_counts_at_minus2"] = sign_counts_json(rep.shifted_counts);
    if (include_charpoly) j["charpoly"] = charpoly_json(rep.charpoly);
    return dump(j);
}

std::string components_report_json(const MixedGraph& g) {
    const Decomposition dec = decompose(g);
    json j;
    j["schema"] = "mixspec.components/1";
    j["count"] = dec.components.size();
    j["p_ac"] = dec.p_ac;
    j["q_ap"] = dec.q_ap;
    j["l_even"] = dec.l_even;
    json comps = json::array();
    for (const MixedComponent& c : dec.components) {
        json jc;
        jc["type"] = c.ctype == ComponentType::TypeI    ? "I"
                     : c.ctype == ComponentType::TypeII ? "II"
                                                        : "III";
        jc["vertices"] = c.vertices;
        jc["theta"] = c.theta;
        json omega = json::array();
        for (const auto& [key, m] : c.omega) {
            json e = json::array({key.first, key.second});
            for (int i = 0; i < m; ++i) omega.push_back(e);
        }
        jc["omega"] = omega;
        jc["t"] = c.t;
        jc["ap"] = c.is_ap;
        jc["ac"] = c.is_ac;
        jc["assoc_vertices"] = c.assoc_component;
        comps.push_back(jc);
    }
    j["components"] = comps;
    return dump(j);
}

std::string det_report_json(const MixedGraph& g, bool want_formula, bool want_exact) {
    json j;
    j["schema"] = "mixspec.det/1";
    mpz_class exact;
    if (want_exact) {
        exact = det_exact(integrated_adjacency(g).matrix);
        j["exact"] = exact.get_str();
    }
    if (want_formula) {
        const DetFormulaReport rep = det_formula(g);
        j["formula"] = rep.value.get_str();
        j["p_ac"] = rep.p_ac;
        j["q_ap"] = rep.q_ap;
        j["l_even"] = rep.l_even;
        j["t_ap"] = rep.t_ap;
        j["t_ac_even"] = rep.t_ac_even;
        if (want_exact) j["agree"] = rep.value == exact;
    }
    return dump(j);
}

std::string bounds_report_json(const MixedGraph& g, bool exact_alpha_omega) {
    const BoundsReport rep = degree_bounds(g);
    json j;
    j["schema"] = "mixspec.bounds/1";
    j["delta1"] = rep.delta1;
    j["delta2"] = rep.delta2;
    j["small_delta1"] = rep.sdelta1;
    j["small_delta2"] = rep.sdelta2;
    json checks = json::array();
    for (const BoundCheck& c : rep.checks)
        checks.push_back(json{{"name", c.name},
                              {"lhs", round_real(c.lhs)},
                              {"rhs", round_real(c.rhs)},
                              {"slack", round_real(c.slack())},
                              {"pass", c.pass()}});
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass();

    const IndependenceReport ind = independence_bounds(g, exact_alpha_omega ? kExhaustiveSearchCap : -1);
    json ji;
    if (ind.alpha) ji["alpha"] = *ind.alpha;
    ji["bound_sign_counts"] = round_real(ind.bound_sign_counts);
    if (ind.bound_regular) ji["bound_regular"] = round_real(*ind.bound_regular);
    ji["pass"] = ind.pass;
    j["independence"] = ji;

    const CliqueReport cl = clique_bound(g, exact_alpha_omega ? kExhaustiveSearchCap : -1);
    json jc;
    if (cl.omega) jc["omega"] = *cl.omega;
    jc["s"] = round_real(cl.s);
    jc["pass"] = cl.pass;
    j["clique"] = jc;
    return dump(j);
}

std::string walks_report_json(const MixedGraph& g, Vertex from, Vertex to, int length,
                              std::int64_t budget) {
    const WalkClassCounts counts = count_classified(g, from, to, length, budget);
    const IntegratedMatrix im = integrated_adjacency(g);
    const IntMatrix pw = power(im.matrix, static_cast<unsigned>(length));
    const int n = g.vertex_count();
    json j;
    j["schema"] = "mixspec.walks/1";
    j["from"] = from;
    j["to"] = to;
    j["length"] = length;
    j["counts"] = json{{"no_arc", counts.no_arc},
                       {"even_first_forward", counts.even_first_forward},
                       {"odd_first_forward", counts.odd_first_forward},
                       {"odd_first_backward", counts.odd_first_backward},
                       {"even_first_backward", counts.even_first_backward}};
    const mpz_class pp = pw.at(from, to);
    const mpz_class pd = pw.at(from, n + to);
    const mpz_class dp = pw.at(n + from, to);
    const mpz_class dd = pw.at(n + from, n + to);
    j["matrix_entries"] = json{{"prime_prime", pp.get_str()},
                               {"prime_dprime", pd.get_str()},
                               {"dprime_prime", dp.get_str()},
                               {"dprime_dprime", dd.get_str()}};
    j["match"] = pp == counts.no_arc + counts.even_first_forward &&
                 pd == counts.odd_first_forward && dp == counts.odd_first_backward &&
                 dd == counts.no_arc + counts.even_first_backward;
    return dump(j);
}

namespace {

std::string real_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", round_real(v));
    return buf;
}

}  // namespace

std::string spectrum_text(const MixedGraph& g, bool include_charpoly) {
    const SpectrumReport rep = spectrum(g);
    std::ostringstream os;
    os << "n " << g.vertex_count() << ", eigenvalues " << rep.eigenvalues.size() << "\n";
    os << "spectrum:";
    for (double v : rep.eigenvalues) os << " " << real_str(v);
    os << "\nclusters:";
    for (const EigenCluster& c : rep.clusters)
        os << " " << real_str(c.value) << " (x" << c.multiplicity << ")";
    os << "\nsign counts: +" << rep.sign_counts.plus << " 0:" << rep.sign_counts.zero << " -"
       << rep.sign_counts.minus;
    os << "\ncounts at -2: +" << rep.shifted_counts.plus << " 0:" << rep.shifted_counts.zero
       << " -" << rep.shifted_counts.minus << "\n";
    if (include_charpoly) os << "charpoly: " << rep.charpoly.to_string() << "\n";
    return os.str();
}

std::string components_text(const MixedGraph& g) {
    const Decomposition dec = decompose(g);
    std::ostringstream os;
    os << dec.components.size() << " mixed components (p_ac=" << dec.p_ac
       << ", q_ap=" << dec.q_ap << ", l_even=" << dec.l_even << ")\n";
    int id = 0;
    for (const MixedComponent& c : dec.components) {
        os << "  [" << ++id << "] type "
           << (c.ctype == ComponentType::TypeI    ? "I"
               : c.ctype == ComponentType::TypeII ? "II"
                                                  : "III")
           << " vertices {";
        bool first = true;
        for (Vertex v : c.vertices) {
            if (!first) os << ",";
            os << v;
            first = false;
        }
        os << "} theta {";
        first = true;
        for (Vertex v : c.theta) {
            if (!first) os << ",";
            os << v;
            first = false;
        }
        os << "} t=" << c.t;
        if (c.is_ap) os << " AP";
        if (c.is_ac) os << " AC";
        os << "\n";
    }
    return os.str();
}

std::string matrix_text(const MixedGraph& g) {
    const IntegratedMatrix im = integrated_adjacency(g);
    const int n = g.vertex_count();
    std::ostringstream os;
    os << "# rows/cols: ";
    for (int v = 0; v < n; ++v) os << v << "' ";
    for (int v = 0; v < n; ++v) os << v << "'' ";
    os << "\n" << im.matrix.to_string();
    return os.str();
}

}  // namespace mixspec
