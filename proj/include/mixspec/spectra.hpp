#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mixspec/eigen_sym.hpp"
#include "mixspec/int_matrix.hpp"
#include "mixspec/mixed_graph.hpp"

namespace mixspec {

struct SignCounts {
    int plus = 0, zero = 0, minus = 0;
    bool operator==(const SignCounts&) const = default;
};

struct SpectrumReport {
    std::vector<double> eigenvalues;        // descending
    std::vector<EigenCluster> clusters;     // value/multiplicity after clustering
    CharPoly charpoly;                      // exact
    SignCounts sign_counts;                 // relative to 0
    SignCounts shifted_counts;              // relative to -2
    double sign_tol = 0.0;                  // tolerance used for the sign counts
};

SpectrumReport spectrum(const MixedGraph& g);

// Sign counts of values around center with tolerance tol*(1+|center|+scale).
SignCounts count_signs(const std::vector<double>& values, double center, double tol,
                       double scale);

struct TraceReport {
    double lambda_sum = 0.0;
    double lambda_sq_sum = 0.0;
    long long four_e_plus_two_a = 0;
    bool sums_ok = false;       // within 1e-8
    mpz_class c2;               // exact x^{2n-2} coefficient
    mpz_class expected_c2;      // -(2e + a)
    bool c2_ok = false;
    bool pass() const { return sums_ok && c2_ok; }
};

// Zero trace, squared-eigenvalue sum 4e+2a, and the exact second
// coefficient -(2e+a). Requires a simple graph.
TraceReport check_trace_identities(const MixedGraph& g);

struct InterlacingReport {
    int host_dim = 0;  // 2n
    int sub_dim = 0;   // 2m
    double worst_slack = 0.0;
    bool pass = false;
};

// Eigenvalues of the induced submixed graph interlace those of g:
// lambda_i(G) >= lambda_i(H) >= lambda_{i+2n-2m}(G). Requires g simple and
// vs a proper nonempty subset.
InterlacingReport check_interlacing(const MixedGraph& g, const std::set<Vertex>& vs,
                                    double tol = 1e-8);

struct RsRegularReport {
    bool regular = false;
    int r = 0, s = 0;
    bool eigenpairs_exact = false;  // integer identities for 1 and [1;-1]
};

// (r,s)-regularity with the exact designated eigenpair identities.
RsRegularReport check_rs_regular(const MixedGraph& g);

struct RRegularReport {
    bool regular = false;
    int r = 0;
    double lambda1 = 0.0;
    int multiplicity = 0;
    int component_count = 0;
    bool multiplicity_matches = false;  // checked for simple graphs
    bool applicable = false;            // g simple and regular
};

// Mixed r-regularity; for simple regular graphs also checks that the
// multiplicity of r equals the mixed-component count.
RRegularReport check_r_regular(const MixedGraph& g);

enum class VertexAdditionMode {
    ArcToNew = 1,       // v_j -> u
    ArcFromNew = 2,     // u -> v_j
    EdgeToNew = 3,      // v_j ~ u
    DigonWithNew = 4,   // v_j <-> u
    ArcToNewEdge = 5,   // v_j -> u plus edge
    ArcFromNewEdge = 6, // u -> v_j plus edge
    DigonEdge = 7,      // digon plus edge
};

struct VertexAdditionReport {
    VertexAdditionMode mode;
    IntPoly lhs;              // characteristic polynomial of the grown graph
    IntPoly rhs;              // right side with minor polynomials read as
                              // characteristic polynomials of the submatrices
    IntPoly rhs_char_matrix;  // off-diagonal terms read as minors of xI - M
    bool equal = false;
    bool equal_char_matrix = false;
    IntPoly difference;       // lhs - rhs
};

// Builds the grown graph for the mode, computes both sides of the matching
// polynomial identity exactly, and reports them side by side. For modes 5-7
// the off-diagonal minor terms are evaluated under both readings.
VertexAdditionReport check_vertex_addition(const MixedGraph& g, Vertex j,
                                           VertexAdditionMode mode);

enum class ClosedFormFamily {
    CompleteGraph,
    CompleteMixed,
    CompleteDirected,
    CompleteKPartiteMixed,
    CompleteKPartiteDirected,
    OrientedPathSame,
    OrientedPathAlt,
    OrientedCycleSame,
    OrientedCycleAlt,
    Path,
    Cycle,
    UniconnectedAltPath,       // associated graph a path on 2n vertices
    UniconnectedAltCycleOdd,   // same spectrum, reached through an odd closed walk
    UniconnectedAltCycleEven,  // associated graph a cycle on 2n vertices
};

// Closed-form spectrum of the family as (value, multiplicity) pairs sorted
// by descending value, duplicates merged. K-partite families take the part
// count k and part size m; the rest take n.
std::vector<std::pair<double, int>> closed_form_spectrum(ClosedFormFamily family,
                                                         const std::vector<int>& params);

struct PerronReport {
    bool uniconnected = false;
    double lambda1 = 0.0;
    int multiplicity = 0;
    double min_entry = 0.0;  // of the normalized leading eigenvector
    bool simple_positive = false;
    bool equivalence_holds = false;
};

// Uniconnected iff the top eigenvalue is simple with a strictly positive
// eigenvector. Requires a simple graph.
PerronReport check_perron(const MixedGraph& g);

}  // namespace mixspec
