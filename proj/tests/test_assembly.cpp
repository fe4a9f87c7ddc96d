#include "doctest.h"
#include "punctorus/assembly.hpp"
#include "punctorus/freegroup.hpp"
#include "punctorus/pairing.hpp"

#include <algorithm>
#include <set>

using namespace punctorus;

namespace {

// independent face-count oracle (cycles of iota∘sigma on darts)
int face_count_oracle(const EmbeddedGraph& g) {
    int n = 2 * (int)g.edges.size();
    std::vector<int> sigma(n, -1);
    for (int v = 1; v <= g.vertex_count; ++v) {
        const auto& rot = g.rotations[v - 1];
        for (size_t i = 0; i < rot.size(); ++i) {
            int a = 2 * rot[i].edge + rot[i].end;
            const EndRef& nx = rot[(i + 1) % rot.size()];
            sigma[a] = 2 * nx.edge + nx.end;
        }
    }
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        ++cycles;
        int x = d;
        while (!seen[x]) {
            seen[x] = 1;
            int s = sigma[x];
            x = (s % 2 == 0) ? s + 1 : s - 1;  // iota
        }
    }
    return cycles;
}

// canonical cyclic form of an x/y word: per-letter positive exponents, then
// minimal rotation over both traversal directions
std::string canon_cyclic(std::string w) {
    auto flip = [&](char lo, char up) {
        long long sum = 0;
        for (char c : w) sum += c == lo ? 1 : (c == up ? -1 : 0);
        if (sum < 0)
            for (char& c : w) c = c == lo ? up : (c == up ? lo : c);
    };
    flip('x', 'X');
    flip('y', 'Y');
    auto min_rot = [](std::string s) {
        std::string best = s;
        for (size_t i = 1; i < s.size(); ++i) {
            std::rotate(s.begin(), s.begin() + 1, s.end());
            if (s < best) best = s;
        }
        return best;
    };
    std::string rev = w;
    std::reverse(rev.begin(), rev.end());
    return std::min(min_rot(w), min_rot(rev));
}

std::string word_pow(const std::string& base, int k) {
    std::string out;
    for (int i = 0; i < k; ++i) out += base;
    return out;
}

}  // namespace

TEST_CASE("closed-up model exists for t >= 4 with a torus boundary") {
    for (int t : {4, 7, 10}) {
        MtModel m = build_mt(t);
        CHECK(m.boundary_circuits == 1);
        CHECK_FALSE(m.completion.slidable);
    }
    CHECK_THROWS_AS(build_mt(3), UnsupportedInputError);
}

TEST_CASE("assembled face collection has 3t-2 disks with one hexagon") {
    for (int t : {4, 5, 6, 9}) {
        SurfaceAssembly a = build_surface_S(t);
        CHECK((int)a.faces.size() == 3 * t - 2);
        int hex = 0, bigon = 0;
        for (const DiskFace& f : a.faces) {
            if (f.kind == DiskFace::Kind::hexagon) ++hex;
            if (f.kind == DiskFace::Kind::bigon) ++bigon;
        }
        CHECK(hex == 1);
        CHECK(bigon == 3 * t - 3);
        // the hexagon runs through the six written sides in order
        const DiskFace& h = a.faces[a.hexagon_face];
        std::vector<std::pair<std::string, int>> got;
        for (const EdgeSideRef& s : h.sides) got.emplace_back(s.edge, s.copy);
        std::vector<std::pair<std::string, int>> want = {
            {"e1", 2},
            {"e'" + std::to_string(t + 1), 1},
            {"e''3", 2},
            {family_edge_name(t + 2), 1},
            {"e'2", 2},
            {"e''" + std::to_string(t), 1}};
        CHECK(got == want);
    }
}

TEST_CASE("enlarged graph on the torus: degrees, faces, classes") {
    for (int t : {4, 5, 8}) {
        SurfaceAssembly a = build_surface_S(t);
        CHECK(a.g_ts.vertex_count == t);
        CHECK(a.g_ts.edge_count() == 3 * t);
        for (int v = 1; v <= t; ++v) CHECK(a.g_ts.degree(v) == 6);
        CHECK(a.g_ts.toroidal_cellular());
        CHECK(a.trace.face_count() == 2 * t);
        CHECK(face_count_oracle(a.g_ts) == 2 * t);
        // side profile: 2t-2 bigons plus a t-gon and a (t+4)-gon
        std::vector<int> lengths;
        for (int f = 0; f < a.trace.face_count(); ++f) lengths.push_back(a.trace.length(f));
        std::sort(lengths.begin(), lengths.end());
        std::vector<int> want(2 * t - 2, 2);
        want.push_back(t);
        want.push_back(t + 4);
        std::sort(want.begin(), want.end());
        CHECK(lengths == want);
        // parallelism classes: singletons at e1 and e(t+2), pairs at e2 and
        // e(t+1), triples in between
        std::vector<int> sizes = a.g_ts.class_sizes();
        std::vector<int> expect_sizes(t - 2, 3);
        expect_sizes.insert(expect_sizes.end(), {2, 2, 1, 1});
        std::sort(expect_sizes.rbegin(), expect_sizes.rend());
        CHECK(sizes == expect_sizes);
    }
}

TEST_CASE("t=4 face count agrees with the hand-derived value") {
    SurfaceAssembly a = build_surface_S(4);
    CHECK(a.g_ts.vertex_count == 4);
    CHECK(a.g_ts.edge_count() == 12);
    CHECK(a.trace.face_count() == 8);  // V - E + F = 0 on the torus
    CHECK(a.g_ts.genus() == 1);
}

TEST_CASE("boundary traces to two circuits in class order") {
    for (int t : {4, 6, 9}) {
        SurfaceAssembly a = build_surface_S(t);
        auto b = trace_boundary(a);
        REQUIRE(b.size() == 2);
        REQUIRE((int)b[0].size() == 3 * t);
        REQUIRE((int)b[1].size() == 3 * t);
        // collapse the first circuit into runs of parallel-class kinds:
        // plain, then primed, then double-primed
        auto kind = [](const NamedEnd& ne) {
            if (ne.edge.find("''") != std::string::npos) return 2;
            if (ne.edge.find('\'') != std::string::npos) return 1;
            return 0;
        };
        std::vector<std::pair<int, int>> runs;  // (kind, count)
        for (const NamedEnd& ne : b[0]) {
            int k = kind(ne);
            if (runs.empty() || runs.back().first != k)
                runs.emplace_back(k, 1);
            else
                runs.back().second++;
        }
        REQUIRE(runs.size() == 3);
        CHECK(runs[0] == std::pair<int, int>{0, t + 2});
        CHECK(runs[1] == std::pair<int, int>{1, t});
        CHECK(runs[2] == std::pair<int, int>{2, t - 2});
    }
}

TEST_CASE("euler characteristic of the capped surface") {
    for (int t : {4, 20}) {
        SurfaceAssembly a = build_surface_S(t);
        CHECK(euler_of_assembly(a) == 0);
        // dropping the hexagon leaves chi = -1: not a torus
        CHECK(euler_with_face_count(a, (int)a.faces.size() - 1) == -1);
    }
}

TEST_CASE("boundary distance 3 by degree counting") {
    for (int t : {4, 15}) {
        SurfaceAssembly a = build_surface_S(t);
        CHECK(compute_delta_S_T(a) == 3);
    }
    // synthetic uniform degree-4 graph with 2 boundary circuits gives 2
    EmbeddedGraph g;
    g.vertex_count = 2;
    g.edges = {Edge{"p", {1, 2}}, Edge{"q", {2, 1}}, Edge{"r", {1, 2}}, Edge{"s", {2, 1}}};
    g.rotations = {{{0, 0}, {1, 1}, {2, 0}, {3, 1}}, {{1, 0}, {2, 1}, {3, 0}, {0, 1}}};
    CHECK(delta_from_degrees(g, 2) == 2);
    // non-uniform degrees are rejected
    EmbeddedGraph h = standard_strip_graph(4, 1, 1);
    CHECK_THROWS_AS(delta_from_degrees(h, 2), UnsupportedInputError);
}

TEST_CASE("complement pieces two-color properly") {
    for (int t : {4, 7}) {
        SurfaceAssembly a = build_surface_S(t);
        FaceColoring col = two_color_faces(a);
        CHECK(col.proper);
        REQUIRE((int)col.color.size() == a.trace.face_count());
        // crossing any edge flips the color
        for (int e = 0; e < a.g_ts.edge_count(); ++e) {
            int f0 = a.trace.face_of_dir[2 * e];
            int f1 = a.trace.face_of_dir[2 * e + 1];
            CHECK(col.color[f0] != col.color[f1]);
        }
    }
}

TEST_CASE("synthetic odd constraint cycle yields a witness") {
    std::vector<std::pair<int, int>> opposite = {{0, 1}, {1, 2}, {2, 0}};
    BipartiteResult r = two_color_constraints(3, {}, opposite);
    CHECK_FALSE(r.ok);
    CHECK(!r.witness.empty());
}

TEST_CASE("abstract graph of the assembled surface") {
    for (int t : {4, 5, 7}) {
        SurfaceAssembly a = build_surface_S(t);
        EmbeddedGraph gs = graph_GS(a);
        CHECK(gs.vertex_count == 2);
        CHECK(gs.edge_count() == 3 * t);
        CHECK(gs.trace_faces().face_count() == 3 * t - 2);
        std::vector<int> sizes = gs.class_sizes();
        CHECK(sizes == std::vector<int>{t + 2, t, t - 2});
        // every edge joins the two boundary circuits
        for (const Edge& e : gs.edges) CHECK(e.vertex[0] != e.vertex[1]);

        GraphPair pair;
        pair.g1 = gs;
        pair.g2 = a.g_ts;
        pair.n1 = 2;
        pair.n2 = t;
        CHECK(check_parity(pair).pass);
        CHECK(check_no_double_parallel(pair).pass);
    }
}

TEST_CASE("parallel pairs of the enlarged graph bound null-homologous bigons") {
    SurfaceAssembly a = build_surface_S(5);
    CHECK_THROWS_AS(a.g_ts.cycle_slope({"e2", "e'2"}), NullHomologousError);
}

TEST_CASE("black-side boundary word is (yx)^2 y^(t-2)") {
    for (int t : {4, 5, 6}) {
        SurfaceAssembly a = build_surface_S(t);
        std::string w = boundary_word(a, 'B');
        std::string expect = word_pow("yx", 2) + word_pow("y", t - 2);
        CHECK(canon_cyclic(w) == canon_cyclic(expect));
        auto ab = abelianize(xy_to_ab(w));
        long long ex = ab.first < 0 ? -ab.first : ab.first;
        long long ey = ab.second < 0 ? -ab.second : ab.second;
        CHECK(ex == 2);
        CHECK(ey == t);
    }
}

TEST_CASE("white-side boundary word is Y^(t+3) X Y X") {
    for (int t : {4, 5, 6}) {
        SurfaceAssembly a = build_surface_S(t);
        std::string w = boundary_word(a, 'W');
        std::string expect = word_pow("y", t + 3) + "xyx";
        CHECK(canon_cyclic(w) == canon_cyclic(expect));
        auto ab = abelianize(xy_to_ab(w));
        long long ex = ab.first < 0 ? -ab.first : ab.first;
        long long ey = ab.second < 0 ? -ab.second : ab.second;
        CHECK(ex == 2);
        CHECK(ey == t + 4);
    }
}

TEST_CASE("assembly serializes deterministically") {
    SurfaceAssembly a = build_surface_S(4);
    SurfaceAssembly b = build_surface_S(4);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_json().find("\"face_colors\"") != std::string::npos);
}
