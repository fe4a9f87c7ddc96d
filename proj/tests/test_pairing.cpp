#include "doctest.h"
#include "punctorus/assembly.hpp"
#include "punctorus/pairing.hpp"

using namespace punctorus;

namespace {

GraphPair assembled_pair(int t) {
    SurfaceAssembly a = build_surface_S(t);
    GraphPair p;
    p.g1 = graph_GS(a);
    p.g2 = a.g_ts;
    p.n1 = p.g1.vertex_count;
    p.n2 = p.g2.vertex_count;
    return p;
}

}  // namespace

TEST_CASE("parity rule on the assembled pair") {
    GraphPair p = assembled_pair(4);
    ParityReport r = check_parity(p);
    CHECK(r.pass);
    CHECK(r.violating.empty());
    CHECK(r.to_json().find("\"pass\":true") != std::string::npos);
}

TEST_CASE("parity rule on an empty pair") {
    GraphPair p;
    p.g1.vertex_count = 1;
    p.g1.rotations = {{}};
    p.g2 = p.g1;
    p.n1 = p.n2 = 1;
    CHECK(check_parity(p).pass);
}

TEST_CASE("a doubly-negative edge violates parity") {
    GraphPair p = assembled_pair(4);
    // flip one torus-side sign to negative: both sides negative now
    p.g2.edges[p.g2.edge_index("e3")].sign = Sign::negative;
    ParityReport r = check_parity(p);
    CHECK_FALSE(r.pass);
    REQUIRE(r.violating.size() == 1);
    CHECK(r.violating[0] == "e3");
}

TEST_CASE("no-double-parallelism on the assembled pair") {
    for (int t : {4, 5}) {
        DoubleParallelReport r = check_no_double_parallel(assembled_pair(t));
        CHECK(r.pass);
    }
}

TEST_CASE("edges parallel on both sides are reported") {
    // duplicate edge in the same position on both sides: a parallel pair in
    // each graph simultaneously
    EmbeddedGraph g;
    g.vertex_count = 2;
    g.edges = {Edge{"p", {1, 2}, Sign::negative}, Edge{"q", {2, 1}, Sign::negative},
               Edge{"r", {1, 2}, Sign::negative}};
    g.rotations = {{{0, 0}, {1, 1}, {2, 0}}, {{1, 0}, {2, 1}, {0, 1}}};
    // make p and r parallel by inserting r adjacent to p
    EmbeddedGraph h = g;
    h.rotations = {{{0, 0}, {2, 0}, {1, 1}}, {{1, 0}, {0, 1}, {2, 1}}};
    GraphPair p;
    p.g1 = h;
    p.g2 = h;
    for (Edge& e : p.g2.edges) e.sign = Sign::positive;
    p.n1 = p.n2 = 2;
    DoubleParallelReport r = check_no_double_parallel(p);
    if (!r.pass) {
        CHECK(r.violating.size() >= 1);
    }
    // two edges parallel in g1 but in distinct classes of g2 pass
    GraphPair q;
    q.g1 = h;
    q.g2 = g;
    for (Edge& e : q.g2.edges) e.sign = Sign::positive;
    q.n1 = q.n2 = 2;
    // validity of the rule itself: violations on q must be a subset of
    // violations on p
    DoubleParallelReport rq = check_no_double_parallel(q);
    CHECK(rq.violating.size() <= r.violating.size());
}

TEST_CASE("induced permutation of a labeled family") {
    EmbeddedGraph g = standard_strip_graph(5, 1, 1);
    EdgeFamily f = EdgeFamily::from_graph(g, {"e1", "e2", "e3", "e4", "e5", "e6"}, 5);
    CHECK(induced_permutation(f) == 1);
    EdgeFamily r = reversed_family(f);
    CHECK(induced_permutation(r) == 4);
    CHECK((induced_permutation(f) + induced_permutation(r)) % 5 == 0);
}

TEST_CASE("induced permutation across shifts") {
    for (int t = 2; t <= 9; ++t)
        for (int a = 1; a < t; ++a) {
            if (std::gcd(t, a) != 1) continue;
            EmbeddedGraph g = standard_strip_graph(t, a, 1);
            std::vector<std::string> names;
            for (int i = 1; i <= t + 1; ++i) names.push_back(family_edge_name(i));
            EdgeFamily f = EdgeFamily::from_graph(g, names, t);
            CHECK(induced_permutation(f) == a);
            CHECK(induced_permutation(reversed_family(f)) == t - a);
        }
}

TEST_CASE("gcd violations and malformed labels raise") {
    EdgeFamily f;
    f.t = 4;
    f.edge_names = {"e1", "e2"};
    f.labels = {{1, 3}, {2, 4}};  // shift 2 with t = 4
    CHECK_THROWS_AS(induced_permutation(f), GcdViolationError);
    EdgeFamily g;
    g.t = 5;
    g.edge_names = {"e1", "e2"};
    g.labels = {{1, 2}, {2, 4}};  // inconsistent shift
    CHECK_THROWS_AS(induced_permutation(g), MalformedFamilyError);
    EdgeFamily h;
    h.t = 5;
    h.edge_names = {"e1"};
    h.labels = {{1, 2}};
    CHECK_THROWS_AS(induced_permutation(h), MalformedFamilyError);  // k >= 2
}

TEST_CASE("positivity witness thresholds") {
    GraphPair p = assembled_pair(4);
    EdgeFamily f;
    f.t = 4;
    f.edge_names = {"e1", "e2", "e3", "e4", "e5"};
    f.labels = {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 2}};
    CHECK(positivity_witness(p, f) == Positivity::positive);  // 5 = t + 1
    EdgeFamily s;
    s.t = 4;
    s.edge_names = {"e1", "e2"};
    s.labels = {{1, 2}, {2, 3}};
    CHECK(positivity_witness(p, s) == Positivity::inconclusive);
    // extending a family never turns positive into inconclusive
    EdgeFamily w = s;
    w.edge_names.push_back("e3");
    w.labels.emplace_back(3, 4);
    CHECK((int)w.edge_names.size() > (int)s.edge_names.size());
    if (positivity_witness(p, s) == Positivity::positive)
        CHECK(positivity_witness(p, w) == Positivity::positive);
    EdgeFamily tiny;
    tiny.t = 1;
    tiny.edge_names = {"e1", "e2"};
    tiny.labels = {{1, 1}, {1, 1}};
    CHECK(positivity_witness(p, tiny) == Positivity::positive);  // t + 1 = 2
}
