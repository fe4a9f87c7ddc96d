#include "punctorus/cutmodel.hpp"
#include "punctorus/surface_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace punctorus {

namespace {

// vertex label of family index i, in 1..t
int V(int i, int t) { return ((i - 1) % t + t) % t + 1; }

}  // namespace

int family_index(const std::string& edge_name) {
    if (edge_name.size() < 2 || edge_name[0] != 'e')
        throw StructuralError("not a family edge name: " + edge_name);
    for (size_t i = 1; i < edge_name.size(); ++i)
        if (!isdigit((unsigned char)edge_name[i]))
            throw StructuralError("not a family edge name: " + edge_name);
    return std::stoi(edge_name.substr(1));
}

std::string family_edge_name(int index) { return "e" + std::to_string(index); }

EmbeddedGraph standard_strip_graph(int t, int alpha, int first_index) {
    if (t < 2) throw UnsupportedInputError("family model needs t >= 2");
    if (std::gcd(t, alpha) != 1 || alpha < 1 || alpha > t - 1)
        throw GcdViolationError("alpha must satisfy gcd(t, alpha) = 1, 1 <= alpha <= t-1");
    const int s = first_index;
    EmbeddedGraph g;
    g.vertex_count = t;
    for (int i = s; i <= s + t; ++i) {
        Edge e;
        e.name = family_edge_name(i);
        e.vertex[0] = V(i, t);
        e.vertex[1] = V(i + alpha, t);
        e.label[0] = e.vertex[0];
        e.label[1] = e.vertex[1];
        e.sign = Sign::positive;
        g.edges.push_back(e);
    }
    auto idx = [&](int i) { return i - s; };
    g.rotations.resize(t);
    for (int x = 1; x <= t; ++x) {
        // horizontal tail and head at x: unique indices in [s, s+t-1]
        int i_tail = s + ((x - V(s, t)) % t + t) % t;
        int j_head = s + ((x - alpha - V(s, t)) % t + t) % t;
        int wrap = s + t;
        std::vector<EndRef> rot;
        if (x == V(s, t)) {
            rot = {{idx(i_tail), 0}, {idx(j_head), 1}, {idx(wrap), 0}};
        } else if (x == V(s + alpha, t)) {
            rot = {{idx(i_tail), 0}, {idx(wrap), 1}, {idx(j_head), 1}};
        } else {
            rot = {{idx(i_tail), 0}, {idx(j_head), 1}};
        }
        g.rotations[x - 1] = rot;
    }
    g.validate();
    return g;
}

std::map<std::string, std::pair<int, int>> endpoint_table(
    std::initializer_list<const EmbeddedGraph*> graphs) {
    std::map<std::string, std::pair<int, int>> table;
    for (const EmbeddedGraph* g : graphs)
        for (const Edge& e : g->edges) table[e.name] = {e.vertex[0], e.vertex[1]};
    return table;
}

std::vector<Corner> resolve_disk_walk(
    const std::vector<EdgeSideRef>& sides,
    const std::map<std::string, std::pair<int, int>>& endpoints, int t) {
    const int n = (int)sides.size();
    if (n < 2) throw StructuralError("a disk needs at least two sides");
    for (int i = 0; i < n; ++i)
        if (sides[i].copy == sides[(i + 1) % n].copy)
            throw StructuralError("disk sides must alternate between the torus copies");

    auto vert = [&](int i, int end) {
        auto it = endpoints.find(sides[i].edge);
        if (it == endpoints.end())
            throw StructuralError("disk references unknown edge " + sides[i].edge);
        return end == 0 ? it->second.first : it->second.second;
    };

    // dir[i] = 0 means side i runs tail->head (enters at end dir, exits at 1-dir)
    for (int dir0 = 0; dir0 < 2; ++dir0) {
        std::vector<int> dir(n, -1);
        dir[0] = dir0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int j = (i + 1) % n;
            int exit_v = vert(i, 1 - dir[i]);
            // corner runs from copy-1 circle x to copy-2 circle x+1
            int want = sides[i].copy == 1 ? V(exit_v + 1, t) : V(exit_v - 1, t);
            int entry_end = -1;
            for (int k = 0; k < 2; ++k)
                if (vert(j, k) == want) entry_end = k;
            if (entry_end < 0) {
                ok = false;
                break;
            }
            if (dir[j] == -1)
                dir[j] = entry_end;
            else if (i == n - 1 && dir[j] != entry_end)
                ok = false;
        }
        if (!ok) continue;
        std::vector<Corner> corners;
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            Corner c;
            NamedEnd exit{sides[i].edge, 1 - dir[i]};
            NamedEnd entry{sides[j].edge, dir[j]};
            if (sides[i].copy == 1) {
                c.one_side = exit;
                c.two_side = entry;
                c.string_x = vert(i, 1 - dir[i]);
            } else {
                c.one_side = entry;
                c.two_side = exit;
                c.string_x = vert(j, dir[j]);
            }
            corners.push_back(c);
        }
        return corners;
    }
    throw StructuralError("disk boundary walk cannot be closed with string corners");
}

std::vector<std::vector<Corner>> derive_strings(const EmbeddedGraph& g1,
                                                const EmbeddedGraph& g2,
                                                std::vector<DiskFace>& disks, int t) {
    std::vector<std::vector<Corner*>> per_string(t);
    for (DiskFace& d : disks)
        for (Corner& c : d.corners) {
            if (c.string_x < 1 || c.string_x > t)
                throw StructuralError("corner on unknown string");
            per_string[c.string_x - 1].push_back(&c);
        }
    std::vector<std::vector<Corner>> strings(t);
    for (int x = 1; x <= t; ++x) {
        auto& list = per_string[x - 1];
        if (list.empty()) continue;
        auto slot1 = [&](const Corner* c) {
            return g1.slot_of(EndRef{g1.edge_index(c->one_side.edge), c->one_side.end});
        };
        auto slot2 = [&](const Corner* c) {
            return g2.slot_of(EndRef{g2.edge_index(c->two_side.edge), c->two_side.end});
        };
        std::vector<Corner*> by1 = list, by2 = list;
        std::sort(by1.begin(), by1.end(),
                  [&](auto* a, auto* b) { return slot1(a) < slot1(b); });
        std::sort(by2.begin(), by2.end(),
                  [&](auto* a, auto* b) { return slot2(a) < slot2(b); });
        // disjointness of the corner arcs means the two cyclic orders agree
        int m = (int)by1.size();
        int shift = -1;
        for (int k = 0; k < m; ++k)
            if (by2[k] == by1[0]) shift = k;
        bool match = shift >= 0;
        for (int k = 0; match && k < m; ++k)
            if (by2[(shift + k) % m] != by1[k]) match = false;
        if (!match)
            throw StructuralError("corner order mismatch along string " + std::to_string(x) +
                                  ": corners cannot be drawn disjoint");
        for (int k = 0; k < m; ++k) {
            by1[k]->position = k;
            strings[x - 1].push_back(*by1[k]);
        }
    }
    return strings;
}

CutModel build_standard_cut_model(int t, int alpha) {
    CutModel m;
    m.t = t;
    m.alpha = alpha;
    m.g_bot = standard_strip_graph(t, alpha, 1);
    m.g_top = standard_strip_graph(t, alpha, 2);
    auto table = endpoint_table({&m.g_bot, &m.g_top});
    for (int i = 1; i <= t + 1; ++i) {
        DiskFace f;
        f.kind = DiskFace::Kind::bigon;
        f.sides = {{family_edge_name(i), 1}, {family_edge_name(i + 1), 2}};
        f.corners = resolve_disk_walk(f.sides, table, t);
        m.faces.push_back(f);
    }
    m.strings = derive_strings(m.g_bot, m.g_top, m.faces, t);

    // model sanity: both copies toroidal, no parallel pairs, and the two
    // family cycles at distance 1
    if (!m.g_bot.toroidal_cellular() || !m.g_top.toroidal_cellular())
        throw StructuralError("standard model is not toroidal-cellular");
    for (const auto& c : m.g_bot.parallelism_classes())
        if (c.size() != 1) throw StructuralError("standard model has parallel edges");
    std::vector<std::string> gamma1, gamma2;
    for (int i = 1; i <= t; ++i) gamma1.push_back(family_edge_name(i));
    for (int i = 2; i <= t + 1; ++i) gamma2.push_back(family_edge_name(i));
    if (delta(m.g_bot.cycle_slope(gamma1), m.g_bot.cycle_slope(gamma2)) != 1)
        throw StructuralError("family cycles are not at distance 1");
    return m;
}

IntervalSpec to_interval(const EmbeddedGraph& g, const NamedInterval& iv) {
    return IntervalSpec{iv.vertex,
                        EndRef{g.edge_index(iv.left.edge), iv.left.end},
                        EndRef{g.edge_index(iv.right.edge), iv.right.end}};
}

std::vector<NamedInterval> transfer_constraints(const CutModel& m, const std::string& edge) {
    bool in_bot = true, in_top = true;
    try {
        m.g_bot.edge_index(edge);
    } catch (const StructuralError&) {
        in_bot = false;
    }
    try {
        m.g_top.edge_index(edge);
    } catch (const StructuralError&) {
        in_top = false;
    }
    if (!in_bot && !in_top) throw StructuralError("edge on neither copy: " + edge);
    // read intervals off the copy that has the edge; psi preserves names
    const EmbeddedGraph& src = in_bot ? m.g_bot : m.g_top;
    std::vector<NamedInterval> out;
    int ei = src.edge_index(edge);
    for (int end = 0; end < 2; ++end) {
        IntervalSpec iv = src.interval_of(EndRef{ei, end});
        NamedInterval ni;
        ni.vertex = iv.vertex;
        ni.left = NamedEnd{src.edges[iv.left.edge].name, iv.left.end};
        ni.right = NamedEnd{src.edges[iv.right.edge].name, iv.right.end};
        out.push_back(ni);
    }
    return out;
}

namespace {

bool all_classes_singleton(const EmbeddedGraph& g) {
    for (const auto& c : g.parallelism_classes())
        if (c.size() > 1) return false;
    return true;
}

Completion make_completion(const CutModel& m, EmbeddedGraph G, CornerRef tg, CornerRef hg) {
    Completion c;
    c.graph = std::move(G);
    c.tail_slot = tg;
    c.head_slot = hg;
    c.slope_a = c.graph.cycle_slope({family_edge_name(1), family_edge_name(m.t + 1)});
    c.slope_b = c.graph.cycle_slope({family_edge_name(2), family_edge_name(m.t + 2)});
    c.delta_value = delta(c.slope_a, c.slope_b);
    c.slidable = c.delta_value == 0;
    return c;
}

}  // namespace

std::vector<Completion> enumerate_completions(const CutModel& m) {
    const int t = m.t;
    Edge e1;
    e1.name = family_edge_name(1);
    e1.vertex[0] = V(1, t);
    e1.vertex[1] = V(1 + m.alpha, t);
    e1.label[0] = e1.vertex[0];
    e1.label[1] = e1.vertex[1];
    e1.sign = Sign::positive;

    std::vector<Completion> out;
    const int dt = m.g_top.degree(e1.vertex[0]);
    const int dh = m.g_top.degree(e1.vertex[1]);
    for (int tg = 0; tg < dt; ++tg) {
        for (int hg = 0; hg < dh; ++hg) {
            EmbeddedGraph G =
                m.g_top.with_edge(e1, CornerRef{e1.vertex[0], tg}, CornerRef{e1.vertex[1], hg});
            if (G.genus() != 1) continue;  // endpoints on different faces
            if (!all_classes_singleton(G)) continue;  // family edges are never parallel in T
            if (!G.without_edge(family_edge_name(t + 2)).labeled_equal(m.g_bot)) continue;
            out.push_back(make_completion(m, std::move(G), CornerRef{e1.vertex[0], tg},
                                          CornerRef{e1.vertex[1], hg}));
        }
    }

    // cross-check: every solution sits inside the psi-transferred intervals
    auto ivs = transfer_constraints(m, e1.name);
    for (const Completion& c : out) {
        for (int end = 0; end < 2; ++end) {
            auto corners = m.g_top.corners_in_interval(to_interval(m.g_top, ivs[end]));
            CornerRef chosen = end == 0 ? c.tail_slot : c.head_slot;
            if (std::find(corners.begin(), corners.end(), chosen) == corners.end())
                throw StructuralError("completion slot escapes the transferred interval");
        }
    }
    return out;
}

bool is_slidable(const Completion& c) { return c.slidable; }

NamedInterval corner_transfer_interval(const EmbeddedGraph& G, const NamedEnd& known, int t,
                                       bool known_on_copy2, int idx_lo, int idx_hi) {
    int kei = G.edge_index(known.edge);
    EndRef kend{kei, known.end};
    int v = G.vertex_of(kend);
    int d = G.degree(v);
    int s = G.slot_of(kend);
    auto matched = [&](const EndRef& e) {
        int i;
        try {
            i = family_index(G.edges[e.edge].name);
        } catch (const StructuralError&) {
            return false;
        }
        return i >= idx_lo && i <= idx_hi;
    };
    EndRef prev, next;
    for (int k = 1; k <= d; ++k) {
        EndRef e = G.at(v, s - k);
        if (matched(e)) {
            prev = e;
            break;
        }
        if (k == d) throw StructuralError("no matched end before the known end");
    }
    for (int k = 1; k <= d; ++k) {
        EndRef e = G.at(v, s + k);
        if (matched(e)) {
            next = e;
            break;
        }
        if (k == d) throw StructuralError("no matched end after the known end");
    }
    int step = known_on_copy2 ? -1 : +1;  // partner lives one string over
    auto partner = [&](const EndRef& e) {
        int i = family_index(G.edges[e.edge].name);
        return NamedEnd{family_edge_name(i + step), e.end};
    };
    NamedInterval iv;
    iv.vertex = V(v + step, t);
    iv.left = partner(prev);
    iv.right = partner(next);
    return iv;
}

std::vector<std::pair<CornerRef, CornerRef>> extension_placements(const CutModel& m,
                                                                  const Completion& c,
                                                                  bool after) {
    const int t = m.t;
    const EmbeddedGraph& G = c.graph;
    // before: new edge e0 on copy 1 paired with the known e1 on copy 2;
    // after: new edge e(t+3) on copy 2 paired with the known e(t+2) on copy 1.
    std::string known = after ? family_edge_name(t + 2) : family_edge_name(1);
    int new_index = after ? t + 3 : 0;
    int idx_lo = after ? 1 : 2;
    int idx_hi = after ? t + 1 : t + 2;

    Edge ne;
    ne.name = after ? family_edge_name(t + 3) : "e0";
    ne.vertex[0] = V(new_index, t);
    ne.vertex[1] = V(new_index + m.alpha, t);
    ne.label[0] = ne.vertex[0];
    ne.label[1] = ne.vertex[1];
    ne.sign = Sign::positive;

    std::vector<std::vector<CornerRef>> slots(2);
    for (int end = 0; end < 2; ++end) {
        NamedInterval iv =
            corner_transfer_interval(G, NamedEnd{known, end}, t, /*known_on_copy2=*/!after,
                                     idx_lo, idx_hi);
        if (iv.vertex != ne.vertex[end])
            throw StructuralError("corner transfer landed on an unexpected vertex");
        slots[end] = G.corners_in_interval(to_interval(G, iv));
    }
    std::vector<std::pair<CornerRef, CornerRef>> placements;
    for (const CornerRef& a : slots[0])
        for (const CornerRef& b : slots[1]) {
            EmbeddedGraph H = G.with_edge(ne, a, b);
            if (H.genus() != 1) continue;
            if (!all_classes_singleton(H)) continue;
            placements.emplace_back(a, b);
        }
    return placements;
}

ExtensionBound max_extension(const CutModel& m, const Completion& c) {
    if (c.slidable) return ExtensionBound{false, 0};  // unbounded by this test
    bool before_empty = extension_placements(m, c, false).empty();
    bool after_empty = extension_placements(m, c, true).empty();
    if (before_empty && after_empty) return ExtensionBound{true, m.t + 2};
    return ExtensionBound{false, 0};
}

bool check_complete_disk_system(const CutModel& m) {
    std::vector<int> all(m.faces.size());
    std::iota(all.begin(), all.end(), 0);
    return check_disk_system_subset(m, all);
}

bool check_disk_system_subset(const CutModel& m, const std::vector<int>& face_indices) {
    SurfaceComplex sc(m.g_bot, m.g_top, m.faces, m.t);
    return sc.cuts_to_single_planar_piece(face_indices);
}

EmbeddedGraph mirror_graph(const EmbeddedGraph& g) {
    EmbeddedGraph h = g;
    for (auto& rot : h.rotations) std::reverse(rot.begin(), rot.end());
    return h;
}

std::string CutModel::to_json() const {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["alpha"] = alpha;
    j["g_bot"] = nlohmann::ordered_json::parse(g_bot.to_json());
    j["g_top"] = nlohmann::ordered_json::parse(g_top.to_json());
    j["faces"] = nlohmann::ordered_json::array();
    for (const DiskFace& f : faces) {
        nlohmann::ordered_json jf;
        jf["kind"] = f.kind == DiskFace::Kind::bigon
                         ? "bigon"
                         : (f.kind == DiskFace::Kind::hexagon ? "hexagon" : "other");
        jf["sides"] = nlohmann::ordered_json::array();
        for (const EdgeSideRef& s : f.sides)
            jf["sides"].push_back({{"edge", s.edge}, {"copy", s.copy}});
        jf["corners"] = nlohmann::ordered_json::array();
        for (const Corner& c : f.corners) {
            nlohmann::ordered_json jc;
            jc["string"] =
                "I'" + std::to_string(c.string_x) + "," + std::to_string(V(c.string_x + 1, t));
            jc["position"] = c.position;
            jc["one_side"] = c.one_side.edge + (c.one_side.end == 0 ? "+" : "-");
            jc["two_side"] = c.two_side.edge + (c.two_side.end == 0 ? "+" : "-");
            jf["corners"].push_back(jc);
        }
        j["faces"].push_back(jf);
    }
    return j.dump(2);
}

}  // namespace punctorus
