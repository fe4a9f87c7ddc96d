#include "punctorus/assembly.hpp"

#include "punctorus/freegroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace punctorus {

namespace {

int V(int i, int t) { return ((i - 1) % t + t) % t + 1; }

std::string prime(int i) { return "e'" + std::to_string(i); }
std::string dprime(int i) { return "e''" + std::to_string(i); }

}  // namespace

MtModel build_mt(int t) {
    if (t < 4)
        throw UnsupportedInputError(
            "the closed-up family needs t >= 4; t = 2, 3 are annulus small cases");
    MtModel m;
    m.t = t;
    m.cut = build_standard_cut_model(t, 1);
    auto comps = enumerate_completions(m.cut);
    int found = -1;
    for (size_t i = 0; i < comps.size(); ++i)
        if (!comps[i].slidable) found = (int)i;
    if (comps.size() != 2 || found < 0)
        throw StructuralError("expected two completions with one non-slidable");
    m.completion = comps[found];
    // boundary of the quotient: the strings chained by x -> x+1
    std::vector<char> seen(t + 1, 0);
    m.boundary_circuits = 0;
    for (int x = 1; x <= t; ++x) {
        if (seen[x]) continue;
        ++m.boundary_circuits;
        for (int y = x; !seen[y]; y = V(y + 1, t)) seen[y] = 1;
    }
    return m;
}

std::string MtModel::to_json() const {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["cut_model"] = nlohmann::ordered_json::parse(cut.to_json());
    j["completion"] = {{"graph", nlohmann::ordered_json::parse(completion.graph.to_json())},
                       {"slidable", completion.slidable},
                       {"delta", completion.delta_value}};
    j["boundary_circuits"] = boundary_circuits;
    j["boundary_is_torus"] = boundary_circuits == 1;
    return j.dump(2);
}

namespace {

struct AssemblyPlan {
    std::vector<Edge> edges;  // declaration order: e1..e(t+2), e'2.., e''3..
    std::vector<DiskFace> disks;
    int hexagon = -1;
};

AssemblyPlan make_plan(int t, const EmbeddedGraph& completion) {
    AssemblyPlan plan;
    auto copy_edge = [&](const std::string& name, const std::string& parent) {
        const Edge& p = completion.edge_named(parent);
        Edge e = p;
        e.name = name;
        return e;
    };
    for (int i = 1; i <= t + 2; ++i)
        plan.edges.push_back(completion.edge_named(family_edge_name(i)));
    for (int i = 2; i <= t + 1; ++i) plan.edges.push_back(copy_edge(prime(i), family_edge_name(i)));
    for (int i = 3; i <= t; ++i) plan.edges.push_back(copy_edge(dprime(i), family_edge_name(i)));

    for (int i = 1; i <= t + 1; ++i) {
        DiskFace f;
        f.kind = DiskFace::Kind::bigon;
        f.sides = {{family_edge_name(i), 1}, {family_edge_name(i + 1), 2}};
        plan.disks.push_back(f);
    }
    for (int i = 2; i <= t; ++i) {
        DiskFace f;
        f.kind = DiskFace::Kind::bigon;
        f.sides = {{prime(i), 1}, {prime(i + 1), 2}};
        plan.disks.push_back(f);
    }
    for (int i = 3; i <= t - 1; ++i) {
        DiskFace f;
        f.kind = DiskFace::Kind::bigon;
        f.sides = {{dprime(i), 1}, {dprime(i + 1), 2}};
        plan.disks.push_back(f);
    }
    DiskFace hex;
    hex.kind = DiskFace::Kind::hexagon;
    hex.sides = {{family_edge_name(1), 2}, {prime(t + 1), 1}, {dprime(3), 2},
                 {family_edge_name(t + 2), 1}, {prime(2), 2}, {dprime(t), 1}};
    plan.hexagon = (int)plan.disks.size();
    plan.disks.push_back(hex);

    std::map<std::string, std::pair<int, int>> table;
    for (const Edge& e : plan.edges) table[e.name] = {e.vertex[0], e.vertex[1]};
    for (DiskFace& d : plan.disks) d.corners = resolve_disk_walk(d.sides, table, t);
    return plan;
}

// Expected parallelism pattern of the enlarged graph: e1 and e(t+2) alone,
// e2 and e(t+1) doubled, everything in between tripled.
bool classes_match_enlarged_pattern(const EmbeddedGraph& g, int t) {
    std::set<std::set<std::string>> expect;
    expect.insert({family_edge_name(1)});
    expect.insert({family_edge_name(t + 2)});
    expect.insert({family_edge_name(2), prime(2)});
    expect.insert({family_edge_name(t + 1), prime(t + 1)});
    for (int i = 3; i <= t; ++i)
        expect.insert({family_edge_name(i), prime(i), dprime(i)});
    std::set<std::set<std::string>> got;
    for (const auto& cls : g.parallelism_classes()) {
        std::set<std::string> names;
        for (int e : cls) names.insert(g.edges[e].name);
        got.insert(names);
    }
    return got == expect;
}

}  // namespace

SurfaceAssembly build_surface_S(const MtModel& mt) {
    const int t = mt.t;
    const EmbeddedGraph& G = mt.completion.graph;
    AssemblyPlan plan = make_plan(t, G);
    auto pm = partner_map(plan.disks);

    // ends at each vertex, per declaration
    std::vector<std::vector<NamedEnd>> ends_at(t + 1);
    for (const Edge& e : plan.edges)
        for (int k = 0; k < 2; ++k) ends_at[e.vertex[k]].push_back(NamedEnd{e.name, k});

    // the completion's rotation at v1 as named ends
    std::vector<NamedEnd> base;
    for (const EndRef& e : G.rotations[0]) base.push_back(NamedEnd{G.edges[e.edge].name, e.end});

    auto cyclic_equal = [](const std::vector<NamedEnd>& a, const std::vector<NamedEnd>& b) {
        if (a.size() != b.size()) return false;
        for (size_t s = 0; s < a.size(); ++s) {
            bool ok = true;
            for (size_t k = 0; k < a.size() && ok; ++k)
                if (!(a[(s + k) % a.size()] == b[k])) ok = false;
            if (ok) return true;
        }
        return false;
    };

    // search rotations at v1: all arrangements of its six ends whose
    // restriction to the family edges is the completion rotation; the psi
    // condition (corner transport around the strings) then forces the rest
    std::vector<NamedEnd> pool;
    for (const NamedEnd& ne : ends_at[1])
        if (!(ne == base[0])) pool.push_back(ne);
    std::sort(pool.begin(), pool.end());

    std::vector<EmbeddedGraph> survivors;
    std::vector<std::vector<std::vector<NamedEnd>>> survivor_rotations;
    do {
        std::vector<NamedEnd> cand = {base[0]};
        cand.insert(cand.end(), pool.begin(), pool.end());
        // restriction to family edges must read the completion rotation
        std::vector<NamedEnd> restr;
        for (const NamedEnd& ne : cand)
            if (ne.edge.find('\'') == std::string::npos) restr.push_back(ne);
        if (!cyclic_equal(restr, base)) continue;

        // propagate around the strings
        std::vector<std::vector<NamedEnd>> rot(t + 1);
        rot[1] = cand;
        bool ok = true;
        for (int x = 1; x <= t && ok; ++x) {
            std::vector<NamedEnd> next;
            for (const NamedEnd& ne : rot[x]) {
                auto it = pm.find(ne);
                if (it == pm.end()) {
                    ok = false;
                    break;
                }
                next.push_back(it->second);
            }
            if (!ok) break;
            int y = V(x + 1, t);
            if (y == 1) {
                ok = cyclic_equal(next, rot[1]);
            } else {
                rot[y] = next;
            }
        }
        if (!ok) continue;

        EmbeddedGraph g;
        g.vertex_count = t;
        g.edges = plan.edges;
        std::map<std::string, int> index;
        for (size_t i = 0; i < g.edges.size(); ++i) index[g.edges[i].name] = (int)i;
        g.rotations.resize(t);
        for (int x = 1; x <= t; ++x)
            for (const NamedEnd& ne : rot[x])
                g.rotations[x - 1].push_back(EndRef{index[ne.edge], ne.end});
        try {
            g.validate();
            if (g.genus() != 1) continue;
            if (!classes_match_enlarged_pattern(g, t)) continue;
            EmbeddedGraph restricted = g;
            for (int i = 2; i <= t + 1; ++i) restricted = restricted.without_edge(prime(i));
            for (int i = 3; i <= t; ++i) restricted = restricted.without_edge(dprime(i));
            if (!restricted.labeled_equal(G)) continue;
        } catch (const std::exception&) {
            continue;
        }
        bool dup = false;
        for (const EmbeddedGraph& s : survivors)
            if (s.labeled_equal(g)) dup = true;
        if (!dup) {
            survivors.push_back(g);
            survivor_rotations.push_back(rot);
        }
    } while (std::next_permutation(pool.begin(), pool.end()));

    if (survivors.empty())
        throw StructuralError("no enlarged embedding satisfies the gluing condition");
    if (survivors.size() > 1)
        throw StructuralError("enlarged embedding is not unique; model underdetermined");

    SurfaceAssembly a;
    a.t = t;
    a.g_ts = survivors[0];
    a.faces = plan.disks;
    a.hexagon_face = plan.hexagon;
    a.strings = derive_strings(a.g_ts, a.g_ts, a.faces, t);
    a.trace = a.g_ts.trace_faces();

    // boundary circuits, with the circuit through e1's tail first and
    // rotated to start there
    auto orbits = boundary_orbits(a.faces);
    if (orbits.size() != 2) throw StructuralError("assembled surface boundary is not 2 circuits");
    NamedEnd start{family_edge_name(1), 0};
    int which = -1;
    for (int i = 0; i < 2; ++i)
        for (const NamedEnd& ne : orbits[i])
            if (ne == start) which = i;
    if (which < 0) throw StructuralError("e1 tail missing from the boundary");
    if (which == 1) std::swap(orbits[0], orbits[1]);
    auto it = std::find(orbits[0].begin(), orbits[0].end(), start);
    std::rotate(orbits[0].begin(), it, orbits[0].end());
    a.boundary = orbits;

    // complement two-coloring, normalized so the bigon at e2 is black (0)
    SurfaceComplex sc(a.g_ts, a.g_ts, a.faces, t);
    auto col = sc.two_color(true);
    if (!col.ok) throw StructuralError("complement pieces admit no proper two-coloring");
    a.face_color = col.face_color_copy1;
    int e2 = a.g_ts.edge_index(family_edge_name(2));
    int x_face = -1;
    for (int d = 0; d < 2; ++d) {
        int f = a.trace.face_of_dir[2 * e2 + d];
        if (a.trace.length(f) == 2) x_face = f;
    }
    if (x_face < 0) throw StructuralError("no bigon face at e2");
    if (a.face_color[x_face] != 0)
        for (int& c : a.face_color) c = 1 - c;
    return a;
}

SurfaceAssembly build_surface_S(int t) { return build_surface_S(build_mt(t)); }

std::vector<std::vector<NamedEnd>> trace_boundary(const SurfaceAssembly& a) {
    return a.boundary;
}

int euler_of_assembly(const SurfaceAssembly& a) {
    return euler_with_face_count(a, (int)a.faces.size());
}

int euler_with_face_count(const SurfaceAssembly& a, int face_count) {
    return (int)a.boundary.size() - a.g_ts.edge_count() + face_count;
}

int delta_from_degrees(const EmbeddedGraph& g, int boundary_count) {
    int d = g.degree(1);
    for (int v = 2; v <= g.vertex_count; ++v)
        if (g.degree(v) != d)
            throw UnsupportedInputError("vertex degrees are not uniform; distance undefined");
    if (boundary_count <= 0 || d % boundary_count != 0)
        throw UnsupportedInputError("degree is not a multiple of the boundary count");
    return d / boundary_count;
}

int compute_delta_S_T(const SurfaceAssembly& a) {
    return delta_from_degrees(a.g_ts, (int)a.boundary.size());
}

FaceColoring two_color_faces(const SurfaceAssembly& a) {
    SurfaceComplex sc(a.g_ts, a.g_ts, a.faces, a.t);
    auto col = sc.two_color(true);
    FaceColoring fc;
    fc.proper = col.ok;
    if (col.ok) {
        fc.color = col.face_color_copy1;
        // align with the stored normalization
        if (!a.face_color.empty() && fc.color[0] != a.face_color[0])
            for (int& c : fc.color) c = 1 - c;
    } else {
        fc.witness_regions = col.witness_regions;
    }
    return fc;
}

EmbeddedGraph abstract_boundary_graph(const EmbeddedGraph& host,
                                      const std::vector<std::vector<NamedEnd>>& orbits,
                                      int expected_faces) {
    std::map<NamedEnd, int> orbit_of;
    for (size_t i = 0; i < orbits.size(); ++i)
        for (const NamedEnd& ne : orbits[i]) orbit_of[ne] = (int)i;

    EmbeddedGraph g;
    g.vertex_count = (int)orbits.size();
    std::map<std::string, int> index;
    for (const Edge& he : host.edges) {
        Edge e;
        e.name = he.name;
        for (int k = 0; k < 2; ++k) {
            auto it = orbit_of.find(NamedEnd{he.name, k});
            if (it == orbit_of.end())
                throw StructuralError("edge end missing from boundary circuits: " + he.name);
            e.vertex[k] = it->second + 1;
        }
        e.sign = Sign::negative;  // the assembled-surface side of the parity rule
        e.label[0] = he.vertex[0];
        e.label[1] = he.vertex[1];
        index[e.name] = (int)g.edges.size();
        g.edges.push_back(e);
    }
    // rotation = circuit order; the orientation convention per circuit is
    // pinned by requiring the traced faces to be the glued disks
    int n = (int)orbits.size();
    for (int mask = 0; mask < (1 << n); ++mask) {
        g.rotations.assign(n, {});
        for (int i = 0; i < n; ++i) {
            std::vector<NamedEnd> seq = orbits[i];
            if (mask & (1 << i)) std::reverse(seq.begin(), seq.end());
            for (const NamedEnd& ne : seq)
                g.rotations[i].push_back(EndRef{index[ne.edge], ne.end});
        }
        try {
            g.validate();
            if (g.trace_faces().face_count() == expected_faces && g.genus() <= 1) return g;
        } catch (const std::exception&) {
        }
    }
    throw StructuralError("no circuit orientation reproduces the disk faces");
}

EmbeddedGraph graph_GS(const SurfaceAssembly& a) {
    return abstract_boundary_graph(a.g_ts, a.boundary, (int)a.faces.size());
}

namespace {

// unique bigon face containing the given edge
int bigon_at(const SurfaceAssembly& a, const std::string& edge) {
    int e = a.g_ts.edge_index(edge);
    int found = -1;
    for (int d = 0; d < 2; ++d) {
        int f = a.trace.face_of_dir[2 * e + d];
        if (a.trace.length(f) == 2) {
            if (found >= 0 && found != f) throw StructuralError("two bigons at " + edge);
            found = f;
        }
    }
    if (found < 0) throw StructuralError("no bigon face at " + edge);
    return found;
}

int face_at_with_color(const SurfaceAssembly& a, const std::string& edge, int color) {
    int e = a.g_ts.edge_index(edge);
    int found = -1;
    for (int d = 0; d < 2; ++d) {
        int f = a.trace.face_of_dir[2 * e + d];
        if (a.face_color[f] == color) found = f;
    }
    if (found < 0) throw StructuralError("no face of the requested color at " + edge);
    return found;
}

}  // namespace

std::string boundary_word(const SurfaceAssembly& a, char side) {
    int target = side == 'B' ? 0 : (side == 'W' ? 1 : -1);
    if (target < 0) throw UnsupportedInputError("side must be 'B' or 'W'");
    const int t = a.t;
    int disk_x, disk_y;
    if (side == 'B') {
        disk_x = bigon_at(a, family_edge_name(2));
        if (a.face_color[disk_x] != 0) throw StructuralError("bigon at e2 is not black");
        disk_y = face_at_with_color(a, family_edge_name(t + 2), 0);
        if (a.trace.length(disk_y) != t)
            throw StructuralError("black face at e(t+2) is not t-sided");
    } else {
        // white bigon with corners along v3 and v4: e'3 is flanked by the two
        // bigons of the parallel band at e3, one of each color
        int e3p = a.g_ts.edge_index(prime(3));
        disk_x = -1;
        for (int d = 0; d < 2; ++d) {
            int f = a.trace.face_of_dir[2 * e3p + d];
            if (a.trace.length(f) == 2 && a.face_color[f] == 1) disk_x = f;
        }
        if (disk_x < 0) throw StructuralError("no white bigon in the band at e3");
        disk_y = face_at_with_color(a, family_edge_name(t + 2), 1);
        if (a.trace.length(disk_y) != t + 4)
            throw StructuralError("white face at e(t+2) is not (t+4)-sided");
    }

    std::string w;
    for (const NamedEnd& ne : a.boundary[0]) {
        int e = a.g_ts.edge_index(ne.edge);
        EndRef end{e, ne.end};
        int v = a.g_ts.vertex_of(end);
        int s = a.g_ts.slot_of(end);
        int d = a.g_ts.degree(v);
        int f_before = a.trace.corner_face[v - 1][(s - 1 + d) % d];
        int f_after = a.trace.corner_face[v - 1][s];
        if (a.face_color[f_before] == a.face_color[f_after])
            throw StructuralError("edge end not separating opposite colors");
        int f = a.face_color[f_after] == target ? f_after : f_before;
        bool positive = f == f_after;
        if (f == disk_x) w += positive ? 'x' : 'X';
        if (f == disk_y) w += positive ? 'y' : 'Y';
    }
    // free reduction (coherent crossings make this a no-op in practice)
    Word r = reduce(xy_to_ab(w));
    std::string out;
    for (char c : r) out += c == 'a' ? 'x' : c == 'A' ? 'X' : c == 'b' ? 'y' : 'Y';
    return out;
}

std::string xy_to_ab(const std::string& w) {
    std::string out;
    for (char c : w) {
        switch (c) {
            case 'x': out += 'a'; break;
            case 'X': out += 'A'; break;
            case 'y': out += 'b'; break;
            case 'Y': out += 'B'; break;
            default: throw UnsupportedInputError("not an x/y word");
        }
    }
    return out;
}

std::string SurfaceAssembly::to_json() const {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["graph_on_torus"] = nlohmann::ordered_json::parse(g_ts.to_json());
    j["face_count"] = faces.size();
    j["hexagon_index"] = hexagon_face;
    nlohmann::ordered_json jb = nlohmann::ordered_json::array();
    for (const auto& circuit : boundary) {
        nlohmann::ordered_json jc = nlohmann::ordered_json::array();
        for (const NamedEnd& ne : circuit) jc.push_back(ne.edge + (ne.end == 0 ? "+" : "-"));
        jb.push_back(jc);
    }
    j["boundary"] = jb;
    nlohmann::ordered_json jcol = nlohmann::ordered_json::array();
    for (int c : face_color) jcol.push_back(c == 0 ? "black" : "white");
    j["face_colors"] = jcol;
    return j.dump(2);
}

}  // namespace punctorus
