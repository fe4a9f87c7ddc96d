#include "punctorus/surface_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace punctorus {

namespace {

int wrap_vertex(int v, int t) { return ((v - 1) % t + t) % t + 1; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string circuit_key(const EmbeddedGraph& g, const std::vector<DirEdge>& circ) {
    std::vector<std::string> w;
    for (const DirEdge& d : circ) w.push_back(g.edges[d.edge].name + (d.dir ? "-" : "+"));
    auto best = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    std::string key;
    for (const auto& s : best) key += s + "|";
    return key;
}

}  // namespace

SurfaceComplex::SurfaceComplex(EmbeddedGraph g1, EmbeddedGraph g2, std::vector<DiskFace> disks,
                               int t)
    : g1_(std::move(g1)), g2_(std::move(g2)), disks_(std::move(disks)), t_(t) {
    ft1_ = g1_.trace_faces();
    ft2_ = g2_.trace_faces();
    strings_ = derive_strings(g1_, g2_, disks_, t_);
    for (const auto& s : strings_)
        if (s.empty()) throw UnsupportedInputError("string without corners");
    n_faces1_ = ft1_.face_count();
    n_faces2_ = ft2_.face_count();
    for (const auto& s : strings_) n_rects_ += (int)s.size();
    build_cells();
}

int SurfaceComplex::face_node(int copy, int f) const {
    return copy == 1 ? f : n_faces1_ + f;
}

int SurfaceComplex::rect_base(int x, int k) const {
    int base = n_faces1_ + n_faces2_;
    for (int i = 1; i < x; ++i) base += (int)strings_[i - 1].size();
    return base + k;
}

int SurfaceComplex::rect_of_arc(int copy, int v, int gap) const {
    int x = copy == 1 ? v : wrap_vertex(v - 1, t_);
    const auto& corners = strings_[x - 1];
    int m = (int)corners.size();
    if (m == 1) return rect_base(x, 0);
    const EmbeddedGraph& g = copy == 1 ? g1_ : g2_;
    auto slot = [&](int k) {
        const NamedEnd& ne = copy == 1 ? corners[k].one_side : corners[k].two_side;
        return g.slot_of(EndRef{g.edge_index(ne.edge), ne.end});
    };
    for (int k = 0; k < m; ++k) {
        int a = slot(k), b = slot((k + 1) % m);
        bool inside = a < b ? (gap >= a && gap < b) : (gap >= a || gap < b);
        if (inside) return rect_base(x, k);
    }
    throw StructuralError("arc not covered by any rectangle");
}

void SurfaceComplex::build_cells() {
    // ownership of 1-cells by disk boundaries
    std::map<std::pair<int, std::string>, int> edge_disk;  // (copy, edge) -> disk
    std::map<std::pair<int, int>, int> corner_disk;        // (string, position) -> disk
    for (size_t d = 0; d < disks_.size(); ++d) {
        for (const EdgeSideRef& s : disks_[d].sides) {
            auto key = std::make_pair(s.copy, s.edge);
            if (edge_disk.count(key))
                throw StructuralError("edge copy used by two disks: " + s.edge);
            edge_disk[key] = (int)d;
        }
        for (const Corner& c : disks_[d].corners)
            corner_disk[{c.string_x, c.position}] = (int)d;
    }

    cells_.clear();
    for (int copy = 1; copy <= 2; ++copy) {
        const EmbeddedGraph& g = copy == 1 ? g1_ : g2_;
        const FaceTrace& ft = copy == 1 ? ft1_ : ft2_;
        for (int e = 0; e < g.edge_count(); ++e) {
            OneCell c;
            c.flank_a = face_node(copy, ft.face_of_dir[2 * e]);
            c.flank_b = face_node(copy, ft.face_of_dir[2 * e + 1]);
            auto it = edge_disk.find({copy, g.edges[e].name});
            c.disk = it == edge_disk.end() ? -1 : it->second;
            cells_.push_back(c);
        }
        for (int v = 1; v <= t_; ++v)
            for (int gap = 0; gap < g.degree(v); ++gap) {
                OneCell c;
                c.flank_a = face_node(copy, ft.corner_face[v - 1][gap]);
                c.flank_b = rect_of_arc(copy, v, gap);
                c.disk = -1;
                cells_.push_back(c);
            }
    }
    for (int x = 1; x <= t_; ++x) {
        int m = (int)strings_[x - 1].size();
        for (int k = 0; k < m; ++k) {
            OneCell c;
            c.flank_a = rect_base(x, (k - 1 + m) % m);
            c.flank_b = rect_base(x, k);
            auto it = corner_disk.find({x, k});
            c.disk = it == corner_disk.end() ? -1 : it->second;
            cells_.push_back(c);
        }
    }
}

int SurfaceComplex::euler() const {
    return (n_faces1_ + n_faces2_) - (g1_.edge_count() + g2_.edge_count());
}

int SurfaceComplex::cut_component_count(const std::vector<int>& disk_subset) const {
    std::set<int> cut(disk_subset.begin(), disk_subset.end());
    UnionFind uf(n_faces1_ + n_faces2_ + n_rects_);
    for (const OneCell& c : cells_)
        if (c.disk < 0 || !cut.count(c.disk)) uf.unite(c.flank_a, c.flank_b);
    std::set<int> roots;
    for (int i = 0; i < n_faces1_ + n_faces2_ + n_rects_; ++i) roots.insert(uf.find(i));
    return (int)roots.size();
}

bool SurfaceComplex::cuts_to_single_planar_piece(const std::vector<int>& disk_subset) const {
    if (cut_component_count(disk_subset) != 1) return false;
    int b = 2 * (int)disk_subset.size();
    int chi = euler();
    return 2 - b - chi == 0;  // genus of the single piece
}

BipartiteResult two_color_constraints(int n, const std::vector<std::pair<int, int>>& same,
                                      const std::vector<std::pair<int, int>>& opposite) {
    UnionFind uf(n);
    for (auto& [a, b] : same) uf.unite(a, b);
    std::map<int, std::vector<int>> adj;
    for (auto& [a, b] : opposite) {
        adj[uf.find(a)].push_back(uf.find(b));
        adj[uf.find(b)].push_back(uf.find(a));
    }
    BipartiteResult res;
    res.color.assign(n, -1);
    std::map<int, int> parent;
    for (int start = 0; start < n; ++start) {
        int s = uf.find(start);
        if (res.color[s] >= 0 || !adj.count(s)) continue;
        std::vector<int> queue = {s};
        res.color[s] = 0;
        parent[s] = -1;
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int w : adj[u]) {
                if (res.color[w] < 0) {
                    res.color[w] = 1 - res.color[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if (res.color[w] == res.color[u]) {
                    // odd cycle witness: both parent chains up to the shared root
                    std::vector<int> pu, pw;
                    for (int x = u; x >= 0; x = parent[x]) pu.push_back(x);
                    for (int x = w; x >= 0; x = parent[x]) pw.push_back(x);
                    while (pu.size() > 1 && pw.size() > 1 &&
                           pu[pu.size() - 2] == pw[pw.size() - 2]) {
                        pu.pop_back();
                        pw.pop_back();
                    }
                    res.witness = pu;
                    res.witness.insert(res.witness.end(), pw.rbegin(), pw.rend());
                    res.ok = false;
                    return res;
                }
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        res.color[i] = res.color[r] < 0 ? 0 : res.color[r];
    }
    res.ok = true;
    return res;
}

SurfaceComplex::Coloring SurfaceComplex::two_color(bool identify_copies) const {
    int n = n_faces1_ + n_faces2_ + n_rects_;
    std::vector<std::pair<int, int>> same, opposite;
    for (const OneCell& c : cells_)
        (c.disk < 0 ? same : opposite).emplace_back(c.flank_a, c.flank_b);
    if (identify_copies) {
        std::map<std::string, int> key2;
        for (int f = 0; f < n_faces2_; ++f) key2[circuit_key(g2_, ft2_.circuits[f])] = f;
        if ((int)key2.size() != n_faces2_)
            throw StructuralError("face circuits are not distinguishable");
        for (int f = 0; f < n_faces1_; ++f) {
            auto it = key2.find(circuit_key(g1_, ft1_.circuits[f]));
            if (it == key2.end())
                throw StructuralError("copies do not carry matching face structures");
            same.emplace_back(face_node(1, f), face_node(2, it->second));
        }
    }
    BipartiteResult br = two_color_constraints(n, same, opposite);
    Coloring col;
    col.ok = br.ok;
    if (!br.ok) {
        col.witness_regions = br.witness;
        return col;
    }
    col.face_color_copy1.resize(n_faces1_);
    for (int f = 0; f < n_faces1_; ++f) col.face_color_copy1[f] = br.color[face_node(1, f)];
    col.face_color_copy2.resize(n_faces2_);
    for (int f = 0; f < n_faces2_; ++f) col.face_color_copy2[f] = br.color[face_node(2, f)];
    return col;
}

std::map<NamedEnd, NamedEnd> partner_map(const std::vector<DiskFace>& disks) {
    std::map<NamedEnd, NamedEnd> m;
    for (const DiskFace& d : disks)
        for (const Corner& c : d.corners) {
            if (m.count(c.one_side))
                throw StructuralError("end carries two corners: " + c.one_side.edge);
            m[c.one_side] = c.two_side;
        }
    return m;
}

std::vector<std::vector<NamedEnd>> boundary_orbits(const std::vector<DiskFace>& disks) {
    auto pm = partner_map(disks);
    std::set<NamedEnd> visited;
    std::vector<std::vector<NamedEnd>> orbits;
    for (const auto& [start, unused] : pm) {
        if (visited.count(start)) continue;
        std::vector<NamedEnd> orbit;
        NamedEnd cur = start;
        do {
            orbit.push_back(cur);
            visited.insert(cur);
            auto it = pm.find(cur);
            if (it == pm.end())
                throw StructuralError("boundary tracing left the matched family at " + cur.edge);
            cur = it->second;
        } while (!(cur == start));
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace punctorus
