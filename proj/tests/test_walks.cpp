#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mixspec/errors.hpp"
#include "mixspec/integrated.hpp"
#include "mixspec/walks.hpp"

using namespace mixspec;

namespace {

Walk chain(Vertex start, std::initializer_list<WalkStep> steps) {
    return Walk{start, std::vector<WalkStep>(steps)};
}

// The spanning alternating path of the fig6 component: one edge, five arcs
// with traversal directions F R F R F, the middle one a directed loop.
Walk example_path() {
    return chain(0, {
                        {StepKind::Edge, 0, 1},
                        {StepKind::ArcForward, 1, 2},
                        {StepKind::ArcBackward, 2, 2},
                        {StepKind::ArcForward, 2, 3},
                        {StepKind::ArcBackward, 3, 4},
                        {StepKind::ArcForward, 4, 0},
                        {StepKind::Edge, 0, 1},
                    });
}

// The same walk closed by one more arc, an alternating cycle of length 8.
Walk example_cycle() {
    Walk w = example_path();
    w.steps.push_back({StepKind::ArcBackward, 1, 0});
    return w;
}

}  // namespace

TEST_CASE("alternation detection") {
    CHECK(is_alternating(chain(0, {{StepKind::ArcForward, 0, 1},
                                   {StepKind::ArcBackward, 1, 2},
                                   {StepKind::ArcForward, 2, 0}})));
    CHECK_FALSE(is_alternating(chain(0, {{StepKind::ArcForward, 0, 1},
                                         {StepKind::ArcForward, 1, 2}})));
    // No arcs at all: not an alternating walk.
    CHECK_FALSE(is_alternating(chain(0, {{StepKind::Edge, 0, 1}})));
    CHECK(is_alternating(example_path()));
}

TEST_CASE("malformed walks are rejected") {
    CHECK_THROWS_AS(is_alternating(chain(0, {{StepKind::Edge, 1, 2}})), std::invalid_argument);
}

TEST_CASE("classification covers the five buckets") {
    CHECK(classify(chain(0, {{StepKind::Edge, 0, 1}})) == WalkClass::NoArc);
    CHECK(classify(chain(0, {{StepKind::ArcForward, 0, 1}})) == WalkClass::OddArcsFirstForward);
    CHECK(classify(chain(0, {{StepKind::ArcBackward, 0, 1}})) == WalkClass::OddArcsFirstBackward);
    CHECK(classify(chain(0, {{StepKind::ArcForward, 0, 1}, {StepKind::ArcBackward, 1, 2}})) ==
          WalkClass::EvenArcsFirstForward);
    CHECK(classify(chain(0, {{StepKind::ArcBackward, 0, 1}, {StepKind::ArcForward, 1, 2}})) ==
          WalkClass::EvenArcsFirstBackward);
    CHECK_THROWS_AS(classify(chain(0, {{StepKind::ArcForward, 0, 1},
                                       {StepKind::ArcForward, 1, 2}})),
                    std::invalid_argument);
}

TEST_CASE("zero-length walks count once at the diagonal") {
    MixedGraph g(3);
    g = g.add_edge(0, 1);
    const WalkClassCounts at = count_classified(g, 1, 1, 0);
    CHECK(at.no_arc == 1);
    CHECK(at.total() == 1);
    CHECK(count_classified(g, 0, 1, 0).total() == 0);
}

TEST_CASE("enumeration rejects non-simple graphs and bad lengths") {
    CHECK_THROWS_AS(count_classified(MixedGraph(1).add_loop(0), 0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_classified(MixedGraph(2), 0, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(count_classified(MixedGraph(2), 0, 2, 1), std::invalid_argument);
}

TEST_CASE("a tiny budget trips the resource guard") {
    const MixedGraph g = generate({Family::CompleteMixed, {4}});
    CHECK_THROWS_AS(count_classified(g, 0, 1, 4, 10), ResourceLimitError);
}

TEST_CASE("matrix powers count classified walks on random simple graphs") {
    auto rng = testutil::make_rng(41);
    for (int iter = 0; iter < 25; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const MixedGraph g = testutil::random_simple(rng, n);
        const IntMatrix m = integrated_adjacency(g).matrix;
        const int k = static_cast<int>(rng() % 5);
        const IntMatrix pw = power(m, static_cast<unsigned>(k));
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j) {
                const WalkClassCounts c = count_classified(g, i, j, k);
                CHECK(pw.at(i, j) == c.no_arc + c.even_first_forward);
                CHECK(pw.at(i, n + j) == c.odd_first_forward);
                CHECK(pw.at(n + i, j) == c.odd_first_backward);
                CHECK(pw.at(n + i, n + j) == c.no_arc + c.even_first_backward);
            }
    }
}

TEST_CASE("arcless graphs reduce to undirected walk counting") {
    auto rng = testutil::make_rng(42);
    MixedGraph g(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (rng() % 2) g = g.add_edge(u, v);
    IntMatrix a(5, 5);
    for (const auto& [key, m] : g.edges()) {
        a.at(key.first, key.second) = m;
        a.at(key.second, key.first) = m;
    }
    const IntMatrix a3 = power(a, 3);
    for (Vertex i = 0; i < 5; ++i)
        for (Vertex j = 0; j < 5; ++j) {
            const WalkClassCounts c = count_classified(g, i, j, 3);
            CHECK(c.total() == c.no_arc);
            CHECK(a3.at(i, j) == c.no_arc);
        }
}

TEST_CASE("the printed alternating path example verifies") {
    CHECK(is_alternating_path(example_path()));
}

TEST_CASE("the printed alternating cycle example verifies") {
    const Walk w = example_cycle();
    CHECK(is_alternating_cycle(w));
    // Its vertex conditions fail the path test: the closing vertex repeat
    // spans an even number of arcs.
    CHECK(w.closed());
}

TEST_CASE("a vertex repeat with an even arc gap defeats the path conditions") {
    const Walk w = chain(0, {
                                {StepKind::ArcForward, 0, 1},
                                {StepKind::ArcBackward, 1, 2},
                                {StepKind::Edge, 2, 0},
                            });
    CHECK_FALSE(is_alternating_path(w));
}

TEST_CASE("an arc used twice defeats both path and cycle conditions") {
    const Walk w = chain(0, {
                                {StepKind::ArcForward, 0, 1},
                                {StepKind::ArcBackward, 1, 0},
                            });
    // Both steps traverse distinct arcs (0,1) and (0,1)? No: forward uses
    // (0,1), backward from 1 to 0 also uses (0,1).
    CHECK_FALSE(is_alternating_cycle(w));
}

TEST_CASE("path and cycle predicates demand an alternating input") {
    CHECK_THROWS_AS(is_alternating_path(chain(0, {{StepKind::Edge, 0, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_alternating_cycle(chain(0, {{StepKind::Edge, 0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("classified counts partition the accepted walks") {
    auto rng = testutil::make_rng(43);
    const MixedGraph g = testutil::random_simple(rng, 5);
    long long matrix_total = 0;
    const IntMatrix pw = power(integrated_adjacency(g).matrix, 3);
    const WalkClassCounts c = count_classified(g, 0, 1, 3);
    matrix_total += pw.at(0, 1).get_si() + pw.at(0, 5 + 1).get_si() + pw.at(5, 1).get_si() +
                    pw.at(5, 5 + 1).get_si();
    // The four matrix entries double-count the two pure-edge classes.
    CHECK(matrix_total == c.total() + c.no_arc);
}
