#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <algorithm>

#include "helpers.hpp"
#include "mixspec/eigen_sym.hpp"
#include "mixspec/graph_io.hpp"
#include "mixspec/integrated.hpp"

using namespace mixspec;

namespace {

MixedGraph load_fixture(const std::string& name) {
    std::ifstream in(std::string(MIXSPEC_FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    return parse_graph(in);
}

}  // namespace

TEST_CASE("the shipped four-vertex fixture reproduces its known matrix") {
    const MixedGraph g = load_fixture("fig1.mg");
    const IntegratedMatrix im = integrated_adjacency(g);
    const int expected[8][8] = {
        {2, 1, 1, 1, 1, 1, 0, 0},
        {1, 2, 0, 2, 2, 2, 0, 1},
        {1, 0, 4, 0, 1, 1, 0, 1},
        {1, 2, 0, 0, 0, 0, 1, 0},
        {1, 2, 1, 0, 2, 1, 1, 1},
        {1, 2, 1, 0, 1, 2, 0, 2},
        {0, 0, 0, 1, 1, 0, 4, 0},
        {0, 1, 1, 0, 1, 2, 0, 0},
    };
    REQUIRE(im.matrix.rows() == 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(im.matrix.at(i, j) == expected[i][j]);
    CHECK_FALSE(g.is_simple());
    // Third vertex: diagonal 4 comes from two loops; one more incident edge.
    CHECK(g.degree_profile(2).l == 2);
    CHECK(g.degree_profile(2).d == 5);
}

TEST_CASE("the printed matrix decodes back to the fixture graph") {
    const MixedGraph g = load_fixture("fig1.mg");
    const IntegratedMatrix im = integrated_adjacency(g);
    const MixedGraph decoded = from_integrated(im.matrix, im.index);
    CHECK(decoded == g);
    CHECK(decoded.counts() == g.counts());
    for (Vertex v = 0; v < 4; ++v) CHECK(decoded.degree_profile(v) == g.degree_profile(v));
}

TEST_CASE("a pure graph doubles into two diagonal blocks") {
    MixedGraph g(3);
    g = g.add_edge(0, 1).add_edge(1, 2).add_loop(2);
    const IntMatrix m = integrated_adjacency(g).matrix;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(m.at(i, j) == m.at(3 + i, 3 + j));
            CHECK(m.at(i, 3 + j) == 0);
        }
}

TEST_CASE("the empty graph maps to the zero matrix") {
    const IntMatrix m = integrated_adjacency(MixedGraph(2)).matrix;
    CHECK(m == IntMatrix(4, 4));
}

TEST_CASE("integrated adjacency is symmetric with mirrored blocks") {
    auto rng = testutil::make_rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        const MixedGraph g = testutil::random_multi(rng, 6);
        const IntMatrix m = integrated_adjacency(g).matrix;
        const int n = g.vertex_count();
        CHECK(m.is_symmetric());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(m.at(i, j) == m.at(n + i, n + j));
    }
}

TEST_CASE("round trip through the matrix recovers the graph") {
    auto rng = testutil::make_rng(32);
    for (int iter = 0; iter < 50; ++iter) {
        const MixedGraph g = testutil::random_multi(rng, 1 + static_cast<int>(rng() % 8));
        const IntegratedMatrix im = integrated_adjacency(g);
        CHECK(from_integrated(im.matrix, im.index) == g);
    }
}

TEST_CASE("zero matrix decodes to the empty graph") {
    CHECK(from_integrated(IntMatrix(6, 6), IndexMap{3}) == MixedGraph(3));
}

TEST_CASE("matrix decoding names the violated condition") {
    IndexMap idx{1};
    IntMatrix odd_diag(2, 2);
    odd_diag.at(0, 0) = 1;
    odd_diag.at(1, 1) = 1;
    CHECK_THROWS_WITH_AS(from_integrated(odd_diag, idx),
                         doctest::Contains("odd diagonal"), std::invalid_argument);

    IntMatrix asym(2, 2);
    asym.at(0, 1) = 1;
    CHECK_THROWS_WITH_AS(from_integrated(asym, idx), doctest::Contains("not symmetric"),
                         std::invalid_argument);

    IntMatrix negative(2, 2);
    negative.at(0, 1) = -1;
    negative.at(1, 0) = -1;
    CHECK_THROWS_WITH_AS(from_integrated(negative, idx), doctest::Contains("negative"),
                         std::invalid_argument);

    IntMatrix unequal(4, 4);
    unequal.at(0, 1) = 1;  // edge copy missing from the second block
    unequal.at(1, 0) = 1;
    CHECK_THROWS_WITH_AS(from_integrated(unequal, IndexMap{2}),
                         doctest::Contains("diagonal blocks differ"), std::invalid_argument);

    CHECK_THROWS_WITH_AS(from_integrated(IntMatrix(3, 3), IndexMap{1}),
                         doctest::Contains("dimension"), std::invalid_argument);
}

TEST_CASE("associated graph realizes the integrated adjacency matrix") {
    auto rng = testutil::make_rng(33);
    for (int iter = 0; iter < 40; ++iter) {
        const MixedGraph g = testutil::random_multi(rng, 1 + static_cast<int>(rng() % 8));
        const AssociatedGraph assoc = associated_graph(g);
        const IntMatrix direct = integrated_adjacency(g).matrix;
        // Adjacency matrix of the associated multigraph, built separately.
        const int sz = assoc.base.vertex_count();
        IntMatrix rebuilt(sz, sz);
        for (const auto& [key, m] : assoc.base.edges()) {
            rebuilt.at(key.first, key.second) = m;
            rebuilt.at(key.second, key.first) = m;
        }
        for (const auto& [v, m] : assoc.base.loops()) rebuilt.at(v, v) = 2 * m;
        CHECK(rebuilt == direct);

        const Counts cg = g.counts();
        const Counts ca = assoc.base.counts();
        CHECK(ca.edges == 2 * cg.edges + cg.arcs);
        CHECK(ca.loops == 2 * cg.loops);
        CHECK(ca.arcs == 0);
    }
}

TEST_CASE("the associated graph of a simple graph is simple") {
    auto rng = testutil::make_rng(34);
    for (int iter = 0; iter < 20; ++iter)
        CHECK(associated_graph(testutil::random_simple(rng, 6)).base.is_simple());
}

TEST_CASE("pure graphs double every eigenvalue") {
    auto rng = testutil::make_rng(36);
    for (int iter = 0; iter < 10; ++iter) {
        MixedGraph g(5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (rng() % 2) g = g.add_edge(u, v);
        IntMatrix a(5, 5);
        for (const auto& [key, m] : g.edges()) {
            a.at(key.first, key.second) = m;
            a.at(key.second, key.first) = m;
        }
        const EigenResult small = symmetric_eigen(a);
        const EigenResult big = symmetric_eigen(integrated_adjacency(g).matrix);
        REQUIRE(big.values.size() == 2 * small.values.size());
        for (size_t i = 0; i < small.values.size(); ++i) {
            CHECK(big.values[2 * i] == doctest::Approx(small.values[i]).epsilon(1e-8));
            CHECK(big.values[2 * i + 1] == doctest::Approx(small.values[i]).epsilon(1e-8));
        }
    }
}

TEST_CASE("digon-balanced directed graphs have plus-minus symmetric blocks") {
    auto rng = testutil::make_rng(35);
    // Arcs only, equal multiplicity in both directions.
    MixedGraph g(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (rng() % 2) {
                const int m = 1 + static_cast<int>(rng() % 2);
                g = g.add_arc(u, v, m).add_arc(v, u, m);
            }
    const IntMatrix m = integrated_adjacency(g).matrix;
    const int n = 5;
    IntMatrix abar(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CHECK(m.at(i, j) == 0);  // no undirected part
            CHECK(m.at(i, n + j) == m.at(j, n + i));
            abar.at(i, j) = m.at(i, n + j);
        }
    // Spectrum is the plus-minus double of the arc-count block.
    const EigenResult small = symmetric_eigen(abar);
    const EigenResult big = symmetric_eigen(m);
    std::vector<double> expected;
    for (double v : small.values) {
        expected.push_back(v);
        expected.push_back(-v);
    }
    std::sort(expected.rbegin(), expected.rend());
    REQUIRE(big.values.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(big.values[i] == doctest::Approx(expected[i]).epsilon(1e-8));
}
