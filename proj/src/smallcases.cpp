#include "punctorus/smallcases.hpp"

#include "punctorus/surface_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

namespace punctorus {

namespace {

int V(int i, int t) { return ((i - 1) % t + t) % t + 1; }

struct AnnulusCandidate {
    EmbeddedGraph graph;
    std::vector<DiskFace> disks;
    std::vector<std::vector<Corner>> strings;
    std::vector<std::vector<NamedEnd>> boundary;
    std::vector<int> face_color;
};

// Try to close the 2t family edges into a cyclic disk system; returns false
// when the wrap corners cannot be drawn disjoint.
bool close_annulus(const EmbeddedGraph& H, int t, AnnulusCandidate& out) {
    const int n = 2 * t;
    std::vector<DiskFace> disks;
    auto table = endpoint_table({&H});
    try {
        for (int i = 1; i <= n; ++i) {
            DiskFace f;
            f.kind = DiskFace::Kind::bigon;
            f.sides = {{family_edge_name(i), 1}, {family_edge_name(i % n + 1), 2}};
            f.corners = resolve_disk_walk(f.sides, table, t);
            disks.push_back(f);
        }
        out.graph = H;
        out.disks = disks;
        out.strings = derive_strings(H, H, out.disks, t);
        out.boundary = boundary_orbits(out.disks);
        if (out.boundary.size() != 2) return false;
        SurfaceComplex sc(H, H, out.disks, t);
        auto col = sc.two_color(true);
        if (!col.ok) return false;
        out.face_color = col.face_color_copy1;
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

std::vector<int> face_length_catalog(const EmbeddedGraph& g) {
    FaceTrace ft = g.trace_faces();
    std::vector<int> lengths;
    for (int f = 0; f < ft.face_count(); ++f) lengths.push_back(ft.length(f));
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace

AnnulusCase build_annulus_case(int t) {
    if (t != 2 && t != 3)
        throw UnsupportedInputError("annulus cases exist for t = 2 and t = 3 only");
    CutModel cut = build_standard_cut_model(t, 1);
    auto comps = enumerate_completions(cut);
    const Completion* ns = nullptr;
    for (const auto& c : comps)
        if (!c.slidable) ns = &c;
    if (!ns) throw StructuralError("no non-slidable completion at t = " + std::to_string(t));

    const std::vector<int> expected_catalog =
        t == 2 ? std::vector<int>{4, 4} : std::vector<int>{3, 3, 6};

    // candidate closed-up graphs with 2t edges
    std::vector<EmbeddedGraph> candidates;
    if (t == 2) {
        candidates.push_back(ns->graph);
    } else {
        Edge e6;
        e6.name = family_edge_name(t + 3);
        e6.vertex[0] = V(t + 3, t);
        e6.vertex[1] = V(t + 3 + 1, t);
        e6.label[0] = e6.vertex[0];
        e6.label[1] = e6.vertex[1];
        e6.sign = Sign::positive;
        for (auto& [a, b] : extension_placements(cut, *ns, /*after=*/true)) {
            EmbeddedGraph H = ns->graph.with_edge(e6, a, b);
            bool dup = false;
            for (const EmbeddedGraph& c : candidates)
                if (c.labeled_equal(H)) dup = true;
            if (!dup) candidates.push_back(H);
        }
    }

    std::vector<AnnulusCandidate> valid;
    for (const EmbeddedGraph& H : candidates) {
        AnnulusCandidate cand;
        if (!close_annulus(H, t, cand)) continue;
        if (face_length_catalog(H) != expected_catalog) continue;
        valid.push_back(std::move(cand));
    }
    if (valid.empty())
        throw StructuralError("no annulus realization at t = " + std::to_string(t));

    const AnnulusCandidate& c = valid.front();
    AnnulusCase out;
    out.t = t;
    out.g_t = c.graph;
    out.disks = c.disks;
    out.boundary = c.boundary;
    out.face_color = c.face_color;
    out.face_lengths = face_length_catalog(c.graph);
    out.realizations = (int)valid.size();
    out.g_a = abstract_boundary_graph(c.graph, c.boundary, 2 * t);
    out.delta = delta_from_degrees(c.graph, (int)c.boundary.size());
    out.pair.g1 = out.g_a;
    out.pair.g2 = out.g_t;
    out.pair.n1 = out.g_a.vertex_count;
    out.pair.n2 = out.g_t.vertex_count;
    out.pair.validate();
    if (t == 2) {
        out.seifert = "(+0,1;-1/4,-1/4)";
        out.filling_seifert = "(+0,0;1/2,-1/4,-1/4)";
    } else {
        out.seifert = "(+0,1;-1/3,-1/6)";
        out.filling_seifert = "(+0,0;1/2,-1/3,-1/6)";
    }
    return out;
}

std::vector<ScharlemannInfo> detect_scharlemann_cycles(const EmbeddedGraph& g_t,
                                                       const EmbeddedGraph& g_a) {
    FaceTrace ft = g_t.trace_faces();
    const int s = g_a.vertex_count;
    std::vector<ScharlemannInfo> out;
    for (int f = 0; f < ft.face_count(); ++f) {
        ScharlemannInfo info;
        info.face = f;
        info.length = ft.length(f);
        bool coherent = true;
        int from = 0, to = 0;
        for (const DirEdge& d : ft.circuits[f]) {
            const Edge& ae = g_a.edge_named(g_t.edges[d.edge].name);
            int a = d.dir == 0 ? ae.vertex[0] : ae.vertex[1];
            int b = d.dir == 0 ? ae.vertex[1] : ae.vertex[0];
            if (from == 0) {
                from = a;
                to = b;
            } else if (a != from || b != to) {
                coherent = false;
            }
        }
        bool consecutive = from != to && (V(from + 1, s) == to || V(to + 1, s) == from);
        info.flagged = coherent && consecutive;
        if (info.flagged) {
            info.w_from = from;
            info.w_to = to;
        }
        out.push_back(info);
    }
    return out;
}

std::vector<ScharlemannInfo> detect_scharlemann_cycles(const AnnulusCase& c) {
    return detect_scharlemann_cycles(c.g_t, c.g_a);
}

std::vector<ScanSolution> corr2_scan(int t_lo, int t_hi, int n_max, int delta_min) {
    if (t_lo < 3) t_lo = 3;
    std::vector<ScanSolution> out;
    for (int t = t_lo; t <= t_hi; ++t)
        for (int n = 1; n <= n_max; ++n) {
            // all n reduced edges at the degree-n vertex reach size t+2:
            // delta * t = n * (t + 2)
            if ((n * (t + 2)) % t != 0) continue;
            int d = n * (t + 2) / t;
            if (d < delta_min) continue;
            out.push_back(ScanSolution{n, t, d});
        }
    return out;
}

Corr2Result corr2_t4_contradiction(bool sigma_plus, bool relaxed) {
    const int t = 4;
    CutModel cut = build_standard_cut_model(t, 1);
    auto comps = enumerate_completions(cut);
    const Completion* ns = nullptr;
    for (const auto& c : comps)
        if (!c.slidable) ns = &c;
    if (!ns) throw StructuralError("no non-slidable completion at t = 4");
    const EmbeddedGraph& G = ns->graph;

    // second family around the degree-4 vertex: a_i has its tail at v4; the
    // head and its excluded parallel partner depend on the shift direction
    Edge ai;
    ai.name = "ai";
    ai.vertex[0] = 4;
    ai.vertex[1] = sigma_plus ? 1 : 3;
    ai.sign = Sign::positive;
    Edge ah;  // the bigon partner a_{i-1} on the other copy
    ah.name = "ah";
    ah.vertex[0] = 3;
    ah.vertex[1] = sigma_plus ? 4 : 2;
    ah.sign = Sign::positive;

    Corr2Result res;
    const int d0 = G.degree(ai.vertex[0]), d1 = G.degree(ai.vertex[1]);
    for (int ga = 0; ga < d0; ++ga)
        for (int gb = 0; gb < d1; ++gb) {
            EmbeddedGraph G7;
            try {
                G7 = G.with_edge(ai, CornerRef{ai.vertex[0], ga}, CornerRef{ai.vertex[1], gb});
            } catch (const std::exception&) {
                continue;
            }
            if (G7.genus() != 1) continue;
            if (!relaxed) {
                // a size-6 second family forces a_i non-parallel to the
                // family edge with the same endpoints
                bool parallel = false;
                for (const auto& cls : G7.parallelism_classes())
                    if (cls.size() > 1) parallel = true;
                if (parallel) continue;
            }
            res.ai_placements++;

            // corner transfer across the strings pins a_{i-1}'s admissible
            // gaps; count embeddings compatible with them
            std::vector<std::vector<CornerRef>> slots(2);
            bool transfer_ok = true;
            for (int end = 0; end < 2 && transfer_ok; ++end) {
                try {
                    NamedInterval iv = corner_transfer_interval(
                        G7, NamedEnd{ai.name, end}, t, /*known_on_copy2=*/true, 2, t + 2);
                    if (iv.vertex != ah.vertex[end])
                        throw StructuralError("transfer landed off the partner vertex");
                    slots[end] = G7.corners_in_interval(to_interval(G7, iv));
                } catch (const std::exception&) {
                    transfer_ok = false;
                }
            }
            if (!transfer_ok) continue;
            for (const CornerRef& a : slots[0])
                for (const CornerRef& b : slots[1]) {
                    EmbeddedGraph G8;
                    try {
                        G8 = G7.with_edge(ah, a, b);
                    } catch (const std::exception&) {
                        continue;
                    }
                    if (G8.genus() == 1) res.aim1_placements++;
                }
        }
    return res;
}

std::string AnnulusCase::to_json() const {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["face_lengths"] = face_lengths;
    j["boundary_circuits"] = boundary.size();
    j["delta"] = delta;
    j["seifert"] = seifert;
    j["filling_seifert"] = filling_seifert;
    j["realizations"] = realizations;
    auto flags = detect_scharlemann_cycles(*this);
    nlohmann::ordered_json jf = nlohmann::ordered_json::array();
    for (const auto& s : flags)
        jf.push_back({{"face", s.face},
                      {"length", s.length},
                      {"scharlemann", s.flagged},
                      {"labels", {s.w_from, s.w_to}}});
    j["faces"] = jf;
    j["torus_graph"] = nlohmann::ordered_json::parse(g_t.to_json());
    j["annulus_graph"] = nlohmann::ordered_json::parse(g_a.to_json());
    return j.dump(2);
}

}  // namespace punctorus
