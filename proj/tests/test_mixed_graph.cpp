#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mixspec/families.hpp"
#include "mixspec/mixed_graph.hpp"
#include "oracles.hpp"

using namespace mixspec;

TEST_CASE("degree profile of an isolated vertex") {
    MixedGraph g(3);
    g = g.add_edge(0, 1);
    CHECK(g.degree_profile(2) == DegreeProfile{0, 0, 0, 0});
}

TEST_CASE("degree profile counts loops twice and directed loops on both sides") {
    MixedGraph g(2);
    g = g.add_edge(0, 1).add_loop(0, 2).add_dloop(0, 3).add_arc(0, 1);
    const DegreeProfile p = g.degree_profile(0);
    CHECK(p.d == 1 + 4);
    CHECK(p.l == 2);
    CHECK(p.dplus == 1 + 3);
    CHECK(p.dminus == 3);
}

TEST_CASE("degree profile rejects out-of-range ids") {
    MixedGraph g(2);
    CHECK_THROWS_AS(g.degree_profile(2), std::invalid_argument);
    CHECK_THROWS_AS(g.degree_profile(-1), std::invalid_argument);
}

TEST_CASE("degree profile equals a naive recount on random multigraphs") {
    auto rng = testutil::make_rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        const MixedGraph g = testutil::random_multi(rng, 6);
        for (Vertex v = 0; v < 6; ++v) CHECK(g.degree_profile(v) == oracle::recount_degrees(g, v));
    }
}

TEST_CASE("counts on the empty graph") {
    CHECK(MixedGraph(3).counts() == Counts{0, 0, 0, 0});
}

TEST_CASE("counts of the complete mixed graph on four vertices") {
    const MixedGraph g = generate({Family::CompleteMixed, {4}});
    CHECK(g.counts() == Counts{6, 12, 0, 0});
}

TEST_CASE("handshake identities on random simple graphs") {
    auto rng = testutil::make_rng(12);
    for (int iter = 0; iter < 40; ++iter) {
        const MixedGraph g = testutil::random_simple(rng, 6);
        const Counts c = g.counts();
        long long dsum = 0, plus = 0, minus = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const DegreeProfile p = g.degree_profile(v);
            dsum += p.d;
            plus += p.dplus;
            minus += p.dminus;
        }
        CHECK(dsum == 2 * c.edges);
        CHECK(plus == c.arcs);
        CHECK(minus == c.arcs);
    }
}

TEST_CASE("simplicity") {
    CHECK(generate({Family::CompleteMixed, {3}}).is_simple());
    CHECK_FALSE(MixedGraph(1).add_loop(0).is_simple());
    CHECK_FALSE(MixedGraph(2).add_edge(0, 1, 2).is_simple());
    CHECK_FALSE(MixedGraph(1).add_dloop(0).is_simple());
}

TEST_CASE("induced submixed graph on the full vertex set round-trips") {
    auto rng = testutil::make_rng(13);
    const MixedGraph g = testutil::random_multi(rng, 5);
    std::set<Vertex> all;
    for (Vertex v = 0; v < 5; ++v) all.insert(v);
    std::map<Vertex, Vertex> relabel;
    CHECK(g.induced_submixed(all, &relabel) == g);
    for (Vertex v = 0; v < 5; ++v) CHECK(relabel.at(v) == v);
}

TEST_CASE("induced submixed graph on the empty set") {
    auto rng = testutil::make_rng(14);
    const MixedGraph g = testutil::random_multi(rng, 4);
    CHECK(g.induced_submixed({}).vertex_count() == 0);
}

TEST_CASE("deletion and re-addition restore equality") {
    auto rng = testutil::make_rng(15);
    for (int iter = 0; iter < 20; ++iter) {
        MixedGraph g = testutil::random_multi(rng, 5);
        if (g.edges().empty()) continue;
        const auto [key, m] = *g.edges().begin();
        CHECK(g.delete_edge(key.first, key.second).add_edge(key.first, key.second) == g);
    }
}

TEST_CASE("deleting absent elements is a domain error") {
    MixedGraph g(3);
    g = g.add_edge(0, 1);
    CHECK_THROWS_AS(g.delete_edge(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.delete_arc(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.delete_loop(0), std::invalid_argument);
    CHECK_THROWS_AS(g.delete_dloop(0), std::invalid_argument);
}

TEST_CASE("deleting the only edge leaves an empty graph on two vertices") {
    const MixedGraph g = MixedGraph(2).add_edge(0, 1).delete_edge(0, 1);
    CHECK(g == MixedGraph(2));
}

TEST_CASE("vertex deletion relabels contiguously") {
    MixedGraph g(4);
    g = g.add_edge(0, 3).add_arc(3, 2).add_loop(3);
    const MixedGraph h = g.delete_vertex(1);
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_multiplicity(0, 2) == 1);
    CHECK(h.arc_multiplicity(2, 1) == 1);
    CHECK(h.loop_count(2) == 1);
}

TEST_CASE("canonical form makes equal multigraphs compare equal") {
    MixedGraph a(3);
    a = a.add_edge(2, 0).add_edge(0, 2).add_arc(1, 2);
    MixedGraph b(3);
    b = b.add_edge(0, 2, 2).add_arc(1, 2);
    CHECK(a == b);
}
