#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "mixspec/graph_io.hpp"
#include "mixspec/integrated.hpp"
#include "mixspec/reports.hpp"

using namespace mixspec;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

MixedGraph load_fixture(const std::string& name) {
    const std::string text = read_file(std::string(MIXSPEC_FIXTURES_DIR) + "/" + name);
    return parse_graph(text);
}

}  // namespace

TEST_CASE("minimal documents parse") {
    const MixedGraph g = parse_graph("mg 1\nn 2\ne 0 1\n");
    CHECK(g == MixedGraph(2).add_edge(0, 1));

    const MixedGraph loop = parse_graph("mg 1\nn 1\nla 0\n");
    CHECK(loop == MixedGraph(1).add_dloop(0));
}

TEST_CASE("a lone directed loop yields the exchange matrix") {
    const MixedGraph g = parse_graph("mg 1\nn 1\nla 0\n");
    const IntMatrix m = integrated_adjacency(g).matrix;
    REQUIRE(m.rows() == 2);
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(1, 1) == 0);
}

TEST_CASE("multiplicities accumulate across repeated statements") {
    const MixedGraph g = parse_graph("mg 1\nn 3\ne 0 1\ne 1 0 2\na 0 2\na 0 2\n");
    CHECK(g.edge_multiplicity(0, 1) == 3);
    CHECK(g.arc_multiplicity(0, 2) == 2);
}

TEST_CASE("comments and blank lines are ignored") {
    const MixedGraph g = parse_graph("# heading\nmg 1\n\nn 2\n  # indented comment\ne 0 1 # trailing\n");
    CHECK(g.edge_multiplicity(0, 1) == 1);
}

TEST_CASE("parse errors carry line and column information") {
    try {
        parse_graph("mg 1\nn 2\nzz 0 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 1);
        CHECK(std::string(e.what()).find("unknown statement") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("n 2\n"), ParseError);              // missing header
    CHECK_THROWS_AS(parse_graph("mg 2\nn 1\n"), ParseError);        // bad version
    CHECK_THROWS_AS(parse_graph("mg 1\nn 2\ne 0 2\n"), ParseError); // id out of range
    CHECK_THROWS_AS(parse_graph("mg 1\nn 2\ne 0 1 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("mg 1\nn 2\ne 0 0\n"), ParseError); // loop spelled as edge
    CHECK_THROWS_AS(parse_graph("mg 1\n"), ParseError);             // missing n
}

TEST_CASE("serialization is canonical and round-trips") {
    auto rng = testutil::make_rng(81);
    for (int iter = 0; iter < 100; ++iter) {
        const MixedGraph g = testutil::random_multi(rng, 1 + static_cast<int>(rng() % 8));
        const std::string doc = serialize_graph(g);
        CHECK(parse_graph(doc) == g);
        CHECK(serialize_graph(parse_graph(doc)) == doc);
    }
}

TEST_CASE("shipped fixtures re-serialize to their statement bodies") {
    for (const char* name : {"fig1.mg", "fig3.mg", "fig4.mg", "fig5.mg", "fig6.mg", "fig7.mg"}) {
        const MixedGraph g = load_fixture(name);
        // Canonical body: original minus comment lines.
        std::istringstream in(read_file(std::string(MIXSPEC_FIXTURES_DIR) + "/" + name));
        std::ostringstream body;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty() && line[0] != '#') body << line << "\n";
        CHECK(serialize_graph(g) == body.str());
    }
}

TEST_CASE("report reals are rounded deterministically") {
    CHECK(round_real(0.0) == 0.0);
    CHECK(round_real(-3.5e-11) == 0.0);
    CHECK(round_real(2.2360679774997896) == 2.2360679775);
}

TEST_CASE("golden reports on the shipped fixtures") {
    const std::string golden_dir = MIXSPEC_GOLDEN_DIR;
    CHECK(spectrum_report_json(load_fixture("fig1.mg"), true) ==
          read_file(golden_dir + "/fig1_spectrum.json"));
    CHECK(components_report_json(load_fixture("fig5.mg")) ==
          read_file(golden_dir + "/fig5_components.json"));
    CHECK(det_report_json(load_fixture("fig5.mg"), true, true) ==
          read_file(golden_dir + "/fig5_det.json"));
    CHECK(bounds_report_json(load_fixture("fig4.mg"), true) ==
          read_file(golden_dir + "/fig4_bounds.json"));
    CHECK(walks_report_json(load_fixture("fig4.mg"), 0, 1, 3) ==
          read_file(golden_dir + "/fig4_walks.json"));
}
