#include "doctest.h"
#include "punctorus/fatgraph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace punctorus;

namespace {

EmbeddedGraph one_vertex_torus() {
    // single vertex, rotation (a+ b+ a- b-): the standard torus graph
    EmbeddedGraph g;
    g.vertex_count = 1;
    g.edges = {Edge{"a", {1, 1}}, Edge{"b", {1, 1}}};
    g.rotations = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    return g;
}

EmbeddedGraph circle_on_sphere() {
    EmbeddedGraph g;
    g.vertex_count = 1;
    g.edges = {Edge{"a", {1, 1}}};
    g.rotations = {{{0, 0}, {0, 1}}};
    return g;
}

// Independent face-count oracle: faces of a rotation system are the cycles
// of iota∘sigma on darts, which is conjugate to the sigma∘iota rule used by
// the production tracer, so the counts must agree. Built on raw permutation
// arrays rather than the graph API.
int face_count_oracle(const EmbeddedGraph& g) {
    int n = 2 * (int)g.edges.size();
    std::vector<int> sigma(n, -1), iota(n, -1);
    for (int v = 1; v <= g.vertex_count; ++v) {
        const auto& rot = g.rotations[v - 1];
        for (size_t i = 0; i < rot.size(); ++i) {
            int a = 2 * rot[i].edge + rot[i].end;
            int b = 2 * rot[(i + 1) % rot.size()].edge + rot[(i + 1) % rot.size()].end;
            sigma[a] = b;
        }
    }
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        iota[2 * e] = 2 * e + 1;
        iota[2 * e + 1] = 2 * e;
    }
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        ++cycles;
        int x = d;
        while (!seen[x]) {
            seen[x] = 1;
            x = iota[sigma[x]];
        }
    }
    return cycles;
}

}  // namespace

TEST_CASE("face tracing on the one-vertex torus graph") {
    EmbeddedGraph g = one_vertex_torus();
    FaceTrace ft = g.trace_faces();
    CHECK(ft.face_count() == 1);
    CHECK(g.genus() == 1);
    CHECK(g.toroidal_cellular());
    CHECK(face_count_oracle(g) == 1);
}

TEST_CASE("face tracing on a circle in the sphere") {
    EmbeddedGraph g = circle_on_sphere();
    CHECK(g.trace_faces().face_count() == 2);
    CHECK(g.genus() == 0);
    CHECK_FALSE(g.toroidal_cellular());
    CHECK(face_count_oracle(g) == 2);
}

TEST_CASE("malformed rotations are rejected") {
    EmbeddedGraph g = one_vertex_torus();
    g.rotations[0].pop_back();  // missing end
    CHECK_THROWS_AS(g.trace_faces(), StructuralError);
    EmbeddedGraph h = one_vertex_torus();
    h.rotations[0].push_back({0, 0});  // duplicate end
    CHECK_THROWS_AS(h.trace_faces(), StructuralError);
}

TEST_CASE("slopes of the torus generators") {
    EmbeddedGraph g = one_vertex_torus();
    SlopeClass sa = g.cycle_slope({"a"});
    SlopeClass sb = g.cycle_slope({"b"});
    CHECK(delta(sa, sb) == 1);
    CHECK(delta(sa, sa) == 0);
}

TEST_CASE("slope normalization") {
    CHECK(SlopeClass::normalized(-1, 2) == SlopeClass::normalized(1, -2));
    CHECK(SlopeClass::normalized(0, -1) == SlopeClass{0, 1});
    SlopeClass s = SlopeClass::normalized(-3, 5);
    CHECK(SlopeClass::normalized(s.p, s.q) == s);  // idempotent
}

TEST_CASE("delta determinant examples") {
    CHECK(delta(SlopeClass{1, 0}, SlopeClass{0, 1}) == 1);
    CHECK(delta(SlopeClass{1, 2}, SlopeClass{1, 2}) == 0);
    CHECK(delta(SlopeClass{1, 2}, SlopeClass{1, 3}) == 1);
    // symmetry
    CHECK(delta(SlopeClass{2, 5}, SlopeClass{1, 3}) == delta(SlopeClass{1, 3}, SlopeClass{2, 5}));
}

TEST_CASE("parallelism classes on graphs without parallel pairs") {
    EmbeddedGraph g = one_vertex_torus();
    auto classes = g.parallelism_classes();
    CHECK(classes.size() == 2);  // two singleton classes
    for (const auto& c : classes) CHECK(c.size() == 1);
    auto red = g.reduced_graph();
    CHECK(red.graph.edge_count() == 2);  // reduction is the identity here
    CHECK(red.sizes == std::vector<int>{1, 1});
}

TEST_CASE("interval arithmetic around a vertex") {
    EmbeddedGraph g = one_vertex_torus();
    // rotation (a+ b+ a- b-): the interval around b+ is (a+, a-)
    IntervalSpec iv = g.interval_of({1, 0});
    CHECK(iv.left == EndRef{0, 0});
    CHECK(iv.right == EndRef{0, 1});
    auto corners = g.corners_in_interval(iv);
    REQUIRE(corners.size() == 2);  // gaps (a+,b+) and (b+,a-)
    CHECK(corners[0] == CornerRef{1, 0});
    CHECK(corners[1] == CornerRef{1, 1});
}

TEST_CASE("edge insertion and deletion round-trip") {
    EmbeddedGraph g;
    g.vertex_count = 2;
    g.edges = {Edge{"a", {1, 2}}, Edge{"b", {2, 1}}, Edge{"c", {1, 2}}};
    // gamma = a,b horizontal; c wraps: same shape as the standard strip at t=2
    g.rotations = {{{0, 0}, {1, 1}, {2, 0}}, {{1, 0}, {2, 1}, {0, 1}}};
    g.validate();
    CHECK(g.genus() == 1);
    EmbeddedGraph h = g.with_edge(Edge{"d", {1, 2}}, CornerRef{1, 0}, CornerRef{2, 1});
    h.validate();
    CHECK(h.edge_count() == 4);
    CHECK(h.without_edge("d").labeled_equal(g));
    CHECK_FALSE(h.labeled_equal(g));
    CHECK(face_count_oracle(h) == h.trace_faces().face_count());
}

TEST_CASE("labeled equality is cyclic-rotation invariant") {
    EmbeddedGraph g = one_vertex_torus();
    EmbeddedGraph h = g;
    std::rotate(h.rotations[0].begin(), h.rotations[0].begin() + 2, h.rotations[0].end());
    CHECK(g.labeled_equal(h));
    std::swap(h.rotations[0][1], h.rotations[0][3]);  // now a different embedding
    CHECK_FALSE(g.labeled_equal(h));
}

TEST_CASE("json round trip preserves the embedding") {
    EmbeddedGraph g = one_vertex_torus();
    g.edges[0].sign = Sign::positive;
    g.edges[1].label[0] = 1;
    g.edges[1].label[1] = 1;
    EmbeddedGraph h = EmbeddedGraph::from_json(g.to_json());
    CHECK(g.labeled_equal(h));
    CHECK(h.edges[0].sign == Sign::positive);
    CHECK(h.edges[1].label[0] == 1);
}

TEST_CASE("dot emission mentions every edge") {
    EmbeddedGraph g = one_vertex_torus();
    std::string dot = g.to_dot();
    CHECK(dot.find("v1 -- v1 [label=\"a\"") != std::string::npos);
    CHECK(dot.find("graph {") != std::string::npos);
}

TEST_CASE("random insertions keep tracer and oracle in agreement") {
    std::mt19937 rng(20240);
    EmbeddedGraph g;
    g.vertex_count = 2;
    g.edges = {Edge{"a", {1, 2}}, Edge{"b", {2, 1}}, Edge{"c", {1, 2}}};
    g.rotations = {{{0, 0}, {1, 1}, {2, 0}}, {{1, 0}, {2, 1}, {0, 1}}};
    for (int k = 0; k < 40; ++k) {
        std::uniform_int_distribution<int> d1(0, g.degree(1) - 1), d2(0, g.degree(2) - 1);
        Edge e{"x" + std::to_string(k), {1, 2}};
        EmbeddedGraph h = g.with_edge(e, CornerRef{1, d1(rng)}, CornerRef{2, d2(rng)});
        CHECK(face_count_oracle(h) == h.trace_faces().face_count());
        // Euler characteristic stays consistent with some genus
        int chi = h.vertex_count - h.edge_count() + h.trace_faces().face_count();
        CHECK((2 - chi) % 2 == 0);
        if (h.connected() && (2 - chi) / 2 <= 1) g = h;
    }
}
