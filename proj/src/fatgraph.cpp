#include "punctorus/fatgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace punctorus {

SlopeClass SlopeClass::normalized(long long p, long long q) {
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    return SlopeClass{p, q};
}

long long delta(const SlopeClass& a, const SlopeClass& b) {
    long long d = a.p * b.q - a.q * b.p;
    return d < 0 ? -d : d;
}

void EmbeddedGraph::validate() const {
    if (vertex_count <= 0) throw StructuralError("graph has no vertices");
    if ((int)rotations.size() != vertex_count)
        throw StructuralError("rotation table size mismatch");
    std::vector<int> seen(2 * edges.size(), 0);
    for (int v = 1; v <= vertex_count; ++v) {
        for (const EndRef& e : rotations[v - 1]) {
            if (e.edge < 0 || e.edge >= (int)edges.size() || (e.end != 0 && e.end != 1))
                throw StructuralError("rotation refers to an unknown end");
            if (edges[e.edge].vertex[e.end] != v)
                throw StructuralError("end " + edges[e.edge].name +
                                      " listed at the wrong vertex");
            seen[2 * e.edge + e.end]++;
        }
    }
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != 1)
            throw StructuralError("end of " + edges[i / 2].name +
                                  (seen[i] ? " duplicated" : " missing") +
                                  " in rotations");
    for (const Edge& e : edges)
        for (int k = 0; k < 2; ++k)
            if (e.vertex[k] < 1 || e.vertex[k] > vertex_count)
                throw StructuralError("edge " + e.name + " touches an unknown vertex");
}

int EmbeddedGraph::edge_index(const std::string& name) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return (int)i;
    throw StructuralError("no edge named " + name);
}

int EmbeddedGraph::slot_of(const EndRef& e) const {
    const auto& rot = rotations[vertex_of(e) - 1];
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == e) return (int)i;
    throw StructuralError("end not present in its rotation");
}

EndRef EmbeddedGraph::at(int v, int slot) const {
    const auto& rot = rotations[v - 1];
    return rot[((slot % (int)rot.size()) + rot.size()) % rot.size()];
}

EndRef EmbeddedGraph::rotation_succ(const EndRef& e) const {
    return at(vertex_of(e), slot_of(e) + 1);
}

EndRef EmbeddedGraph::rotation_pred(const EndRef& e) const {
    return at(vertex_of(e), slot_of(e) - 1);
}

bool EmbeddedGraph::connected() const {
    if (vertex_count == 0) return false;
    std::vector<char> vis(vertex_count + 1, 0);
    std::vector<int> stack = {1};
    vis[1] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const EndRef& e : rotations[v - 1]) {
            int w = edges[e.edge].vertex[1 - e.end];
            if (!vis[w]) {
                vis[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 1; v <= vertex_count; ++v)
        if (!vis[v]) return false;
    return true;
}

FaceTrace EmbeddedGraph::trace_faces() const {
    validate();
    FaceTrace ft;
    ft.face_of_dir.assign(2 * edges.size(), -1);
    ft.corner_face.resize(vertex_count);
    for (int v = 1; v <= vertex_count; ++v)
        ft.corner_face[v - 1].assign(degree(v), -1);

    for (int start = 0; start < 2 * (int)edges.size(); ++start) {
        if (ft.face_of_dir[start] >= 0) continue;
        int f = (int)ft.circuits.size();
        ft.circuits.emplace_back();
        DirEdge cur{start / 2, start % 2};
        do {
            ft.face_of_dir[cur.id()] = f;
            ft.circuits[f].push_back(cur);
            EndRef in = cur.in_end();
            int v = vertex_of(in);
            int s = slot_of(in);
            ft.corner_face[v - 1][s] = f;
            EndRef out = at(v, s + 1);
            cur = DirEdge{out.edge, out.end == 0 ? 0 : 1};
        } while (cur.id() != start);
    }
    return ft;
}

int EmbeddedGraph::genus() const {
    if (!connected()) throw UnsupportedInputError("graph is not connected (non-cellular)");
    int V = vertex_count, E = (int)edges.size(), F = trace_faces().face_count();
    int chi = V - E + F;
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw StructuralError("Euler characteristic does not give a genus");
    return (2 - chi) / 2;
}

bool EmbeddedGraph::toroidal_cellular() const {
    return connected() && genus() == 1;
}

IntervalSpec EmbeddedGraph::interval_of(const EndRef& e) const {
    return IntervalSpec{vertex_of(e), rotation_pred(e), rotation_succ(e)};
}

std::vector<CornerRef> EmbeddedGraph::corners_in_interval(const IntervalSpec& iv) const {
    // Corners strictly inside the arc from iv.left to iv.right in rotation
    // direction: gaps starting at iv.left's slot up to (but not through)
    // iv.right's slot.
    int v = iv.vertex;
    if (vertex_of(iv.left) != v || vertex_of(iv.right) != v)
        throw StructuralError("interval bounds not on the named vertex");
    int d = degree(v);
    int s = slot_of(iv.left);
    int e = slot_of(iv.right);
    std::vector<CornerRef> out;
    if (s == e) {  // bounds coincide: the whole circle minus one point
        for (int g = 0; g < d; ++g) out.push_back(CornerRef{v, (s + g) % d});
        return out;
    }
    for (int g = s;; ++g) {
        out.push_back(CornerRef{v, g % d});
        if ((g + 1) % d == e % d) break;
        if (g - s > d) throw StructuralError("interval scan failed");
    }
    return out;
}

EmbeddedGraph EmbeddedGraph::with_edge(const Edge& e, const CornerRef& tail_gap,
                                       const CornerRef& head_gap) const {
    if (tail_gap.vertex == head_gap.vertex)
        throw UnsupportedInputError("edge insertion requires distinct endpoint vertices");
    if (e.vertex[0] != tail_gap.vertex || e.vertex[1] != head_gap.vertex)
        throw StructuralError("edge endpoints do not match the chosen corners");
    EmbeddedGraph g = *this;
    g.homology_cache_.reset();
    int idx = (int)g.edges.size();
    g.edges.push_back(e);
    auto& rt = g.rotations[tail_gap.vertex - 1];
    rt.insert(rt.begin() + tail_gap.gap + 1, EndRef{idx, 0});
    auto& rh = g.rotations[head_gap.vertex - 1];
    rh.insert(rh.begin() + head_gap.gap + 1, EndRef{idx, 1});
    return g;
}

EmbeddedGraph EmbeddedGraph::without_edge(const std::string& name) const {
    int idx = edge_index(name);
    EmbeddedGraph g;
    g.vertex_count = vertex_count;
    for (int i = 0; i < (int)edges.size(); ++i)
        if (i != idx) g.edges.push_back(edges[i]);
    g.rotations.resize(vertex_count);
    for (int v = 1; v <= vertex_count; ++v)
        for (const EndRef& e : rotations[v - 1]) {
            if (e.edge == idx) continue;
            g.rotations[v - 1].push_back(EndRef{e.edge > idx ? e.edge - 1 : e.edge, e.end});
        }
    return g;
}

namespace {

std::vector<std::pair<std::string, int>> canon_rotation(
    const EmbeddedGraph& g, const std::vector<EndRef>& rot) {
    std::vector<std::pair<std::string, int>> w;
    w.reserve(rot.size());
    for (const EndRef& e : rot) w.emplace_back(g.edges[e.edge].name, e.end);
    if (w.empty()) return w;
    auto best = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

}  // namespace

bool EmbeddedGraph::labeled_equal(const EmbeddedGraph& other) const {
    if (vertex_count != other.vertex_count) return false;
    if (edges.size() != other.edges.size()) return false;
    for (const Edge& e : edges) {
        int j;
        try {
            j = other.edge_index(e.name);
        } catch (const StructuralError&) {
            return false;
        }
        if (other.edges[j].vertex[0] != e.vertex[0] || other.edges[j].vertex[1] != e.vertex[1])
            return false;
    }
    for (int v = 1; v <= vertex_count; ++v)
        if (canon_rotation(*this, rotations[v - 1]) !=
            canon_rotation(other, other.rotations[v - 1]))
            return false;
    return true;
}

std::vector<std::vector<int>> EmbeddedGraph::parallelism_classes() const {
    if (!connected()) throw UnsupportedInputError("parallelism needs a cellular graph");
    int g = genus();
    if (g > 1) throw UnsupportedInputError("genus > 1 not supported");
    FaceTrace ft = trace_faces();
    std::vector<int> parent(edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : ft.circuits) {
        if (c.size() != 2) continue;
        if (c[0].edge == c[1].edge)
            throw StructuralError("degenerate bigon bounded by one edge");
        parent[find(c[0].edge)] = find(c[1].edge);
    }
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < (int)edges.size(); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> classes;
    std::vector<std::pair<int, std::vector<int>>> tmp;
    for (auto& [root, members] : by_root) {
        std::sort(members.begin(), members.end());
        tmp.emplace_back(members.front(), members);
    }
    std::sort(tmp.begin(), tmp.end());
    for (auto& [k, members] : tmp) classes.push_back(members);
    return classes;
}

std::vector<int> EmbeddedGraph::class_sizes() const {
    std::vector<int> sizes;
    for (const auto& c : parallelism_classes()) sizes.push_back((int)c.size());
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

EmbeddedGraph::Reduced EmbeddedGraph::reduced_graph() const {
    auto classes = parallelism_classes();
    EmbeddedGraph g = *this;
    std::vector<std::pair<std::string, int>> keep;  // representative name, size
    for (const auto& c : classes) keep.emplace_back(edges[c.front()].name, (int)c.size());
    std::set<std::string> reps;
    for (auto& [name, size] : keep) reps.insert(name);
    std::vector<std::string> drop;
    for (const Edge& e : edges)
        if (!reps.count(e.name)) drop.push_back(e.name);
    for (const std::string& name : drop) g = g.without_edge(name);
    Reduced r;
    r.graph = g;
    for (const Edge& e : g.edges)
        for (auto& [name, size] : keep)
            if (name == e.name) r.sizes.push_back(size);
    if ((int)g.edges.size() != (int)classes.size())
        throw StructuralError("reduced graph size mismatch");
    return r;
}

// ---------------------------------------------------------------------------
// Homology of the capped surface.
//
// Cycles are integer vectors over the edges (signed traversal counts). The
// face boundary vectors span the lattice of null-homologous cycles; a cycle's
// class is its canonical reduction modulo that lattice, expressed in a basis
// obtained from the fundamental cycles of a deterministic spanning tree.
// ---------------------------------------------------------------------------

struct EmbeddedGraph::HomologyBasis {
    int n = 0;  // number of edges
    // Row-echelon basis of the face lattice with pivot columns.
    std::vector<std::vector<long long>> rows;
    std::vector<int> pivots;
    // Echelon basis of the reduced cycle lattice (rank 2 for the torus).
    std::vector<std::vector<long long>> h_rows;
    std::vector<int> h_pivots;

    void reduce(std::vector<long long>& v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            long long piv = rows[r][pivots[r]];
            long long c = v[pivots[r]] / piv;
            // keep the canonical remainder nonnegative
            if (v[pivots[r]] - c * piv < 0) c -= 1;
            if (c != 0)
                for (int j = 0; j < n; ++j) v[j] -= c * rows[r][j];
        }
    }
};

namespace {

// Integer row echelon form via Euclidean column sweeps. Rows are modified in
// place; returns pivot columns aligned with the surviving rows.
void echelonize(std::vector<std::vector<long long>>& rows, std::vector<int>& pivots, int n) {
    pivots.clear();
    size_t done = 0;
    for (int col = 0; col < n && done < rows.size(); ++col) {
        // gather rows with nonzero entry in col at position >= done
        while (true) {
            int best = -1;
            for (size_t r = done; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best < 0 || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
                    best = (int)r;
            if (best < 0) break;
            std::swap(rows[done], rows[best]);
            bool clean = true;
            for (size_t r = done + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                long long q = rows[r][col] / rows[done][col];
                for (int j = 0; j < n; ++j) rows[r][j] -= q * rows[done][j];
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[done][col] != 0) {
            if (rows[done][col] < 0)
                for (int j = 0; j < n; ++j) rows[done][j] = -rows[done][j];
            pivots.push_back(col);
            ++done;
        }
    }
    rows.resize(done);
    // back-substitute to make entries above pivots canonical
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t s = r + 1; s < rows.size(); ++s) {
            long long piv = rows[s][pivots[s]];
            long long c = rows[r][pivots[s]] / piv;
            if (rows[r][pivots[s]] - c * piv < 0) c -= 1;
            if (c != 0)
                for (int j = 0; j < n; ++j) rows[r][j] -= c * rows[s][j];
        }
    }
}

}  // namespace

const EmbeddedGraph::HomologyBasis& EmbeddedGraph::homology() const {
    if (homology_cache_) return *homology_cache_;
    if (!toroidal_cellular())
        throw UnsupportedInputError("slopes require a toroidal-cellular graph");
    auto hb = std::make_shared<HomologyBasis>();
    int n = hb->n = (int)edges.size();

    FaceTrace ft = trace_faces();
    for (const auto& circ : ft.circuits) {
        std::vector<long long> row(n, 0);
        for (const DirEdge& d : circ) row[d.edge] += d.dir == 0 ? 1 : -1;
        hb->rows.push_back(std::move(row));
    }
    echelonize(hb->rows, hb->pivots, n);

    // Fundamental cycles of a BFS spanning tree rooted at vertex 1, lowest
    // edge index first.
    std::vector<int> tree_parent_edge(vertex_count + 1, -1);
    std::vector<char> in_tree_edge(n, 0), vis(vertex_count + 1, 0);
    std::vector<int> order = {1};
    vis[1] = 1;
    for (size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        std::vector<std::pair<int, int>> nb;  // (edge, other vertex)
        for (const EndRef& e : rotations[v - 1])
            nb.emplace_back(e.edge, edges[e.edge].vertex[1 - e.end]);
        std::sort(nb.begin(), nb.end());
        for (auto& [ei, w] : nb)
            if (!vis[w]) {
                vis[w] = 1;
                in_tree_edge[ei] = 1;
                tree_parent_edge[w] = ei;
                order.push_back(w);
            }
    }
    // signed vertex->root path accumulation
    auto path_to_root = [&](int v, std::vector<long long>& acc, long long sgn) {
        while (tree_parent_edge[v] >= 0) {
            int ei = tree_parent_edge[v];
            const Edge& e = edges[ei];
            // walking from child toward root: determine orientation
            if (e.vertex[1] == v) {
                acc[ei] -= sgn;  // traversed head->tail
                v = e.vertex[0];
            } else {
                acc[ei] += sgn;
                v = e.vertex[1];
            }
            // note: for tree edges child is the endpoint farther from root
        }
    };
    std::vector<std::vector<long long>> fun;
    for (int ei = 0; ei < n; ++ei) {
        if (in_tree_edge[ei]) continue;
        std::vector<long long> v(n, 0);
        v[ei] += 1;
        // close up: path head -> root -> tail, i.e. +path(head) - path(tail)
        path_to_root(edges[ei].vertex[1], v, 1);
        path_to_root(edges[ei].vertex[0], v, -1);
        hb->reduce(v);
        fun.push_back(std::move(v));
    }
    std::vector<int> hp;
    echelonize(fun, hp, n);
    if (fun.size() != 2)
        throw StructuralError("capped surface homology is not rank 2");
    for (size_t r = 0; r < fun.size(); ++r)
        if (fun[r][hp[r]] != 1)
            throw StructuralError("cycle lattice is not unimodular over the face lattice");
    hb->h_rows = fun;
    hb->h_pivots = hp;
    homology_cache_ = hb;
    return *homology_cache_;
}

SlopeClass EmbeddedGraph::cycle_slope(const std::vector<std::string>& cycle_edges) const {
    const HomologyBasis& hb = homology();
    // orient the edge set into a single closed walk
    std::vector<int> idx;
    for (const auto& name : cycle_edges) idx.push_back(edge_index(name));
    std::map<int, std::vector<int>> at_vertex;  // vertex -> positions in idx
    for (size_t i = 0; i < idx.size(); ++i) {
        at_vertex[edges[idx[i]].vertex[0]].push_back((int)i);
        at_vertex[edges[idx[i]].vertex[1]].push_back((int)i);
    }
    for (auto& [v, list] : at_vertex)
        if (list.size() != 2)
            throw StructuralError("edges do not form a single closed cycle");
    std::vector<long long> vec(hb.n, 0);
    std::vector<char> used(idx.size(), 0);
    int cur = 0;
    int at = edges[idx[0]].vertex[0];
    for (size_t steps = 0; steps < idx.size(); ++steps) {
        used[cur] = 1;
        const Edge& e = edges[idx[cur]];
        int to = e.vertex[0] == at ? e.vertex[1] : e.vertex[0];
        vec[idx[cur]] += e.vertex[0] == at ? 1 : -1;
        // find the other unused cycle edge at `to`
        int nxt = -1;
        for (int cand : at_vertex[to])
            if (!used[cand] || (steps + 1 == idx.size() && cand == 0)) nxt = cand;
        if (nxt < 0) throw StructuralError("edges do not form a single closed cycle");
        cur = nxt;
        at = to;
    }
    for (char u : used)
        if (!u) throw StructuralError("edges do not form a single closed cycle");

    hb.reduce(vec);
    long long p = 0, q = 0;
    for (int pass = 0; pass < 2; ++pass) {
        long long c = vec[hb.h_pivots[pass]];
        (pass == 0 ? p : q) = c;
        for (int j = 0; j < hb.n; ++j) vec[j] -= c * hb.h_rows[pass][j];
    }
    for (int j = 0; j < hb.n; ++j)
        if (vec[j] != 0) throw StructuralError("cycle reduction failed");
    if (p == 0 && q == 0)
        throw NullHomologousError("cycle is null-homologous in the capped torus");
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    if (g != 1)
        throw StructuralError("cycle class is not primitive; input is not an embedded circle");
    return SlopeClass::normalized(p, q);
}

std::string EmbeddedGraph::to_dot() const {
    static const char* palette[] = {"black",     "red",    "blue",   "forestgreen",
                                    "darkorange", "purple", "brown",  "deeppink",
                                    "turquoise4", "gold3",  "gray40", "navy"};
    std::map<int, int> cls;
    try {
        auto classes = parallelism_classes();
        for (size_t c = 0; c < classes.size(); ++c)
            for (int e : classes[c]) cls[e] = (int)c;
    } catch (const std::exception&) {
        // uncolored fallback for graphs without a class structure
    }
    std::ostringstream os;
    os << "graph {\n";
    for (int v = 1; v <= vertex_count; ++v) os << "  v" << v << ";\n";
    for (size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        os << "  v" << e.vertex[0] << " -- v" << e.vertex[1] << " [label=\"" << e.name
           << "\"";
        auto it = cls.find((int)i);
        if (it != cls.end()) os << ", color=\"" << palette[it->second % 12] << "\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

std::string end_id(const EmbeddedGraph& g, const EndRef& e) {
    return g.edges[e.edge].name + (e.end == 0 ? "+" : "-");
}

}  // namespace

std::string EmbeddedGraph::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = vertex_count;
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : edges) {
        nlohmann::ordered_json je;
        je["name"] = e.name;
        je["ends"] = {e.vertex[0], e.vertex[1]};
        if (e.sign != Sign::unset) je["sign"] = e.sign == Sign::positive ? "positive" : "negative";
        if (e.label[0] || e.label[1]) je["labels"] = {e.label[0], e.label[1]};
        j["edges"].push_back(je);
    }
    j["rotations"] = nlohmann::ordered_json::array();
    for (int v = 1; v <= vertex_count; ++v) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const EndRef& e : rotations[v - 1]) r.push_back(end_id(*this, e));
        j["rotations"].push_back(r);
    }
    return j.dump(2);
}

EmbeddedGraph EmbeddedGraph::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    EmbeddedGraph g;
    g.vertex_count = j.at("vertices").get<int>();
    std::map<std::string, int> by_name;
    for (const auto& je : j.at("edges")) {
        Edge e;
        e.name = je.at("name").get<std::string>();
        e.vertex[0] = je.at("ends")[0].get<int>();
        e.vertex[1] = je.at("ends")[1].get<int>();
        if (je.contains("sign"))
            e.sign = je["sign"] == "positive" ? Sign::positive : Sign::negative;
        if (je.contains("labels")) {
            e.label[0] = je["labels"][0].get<int>();
            e.label[1] = je["labels"][1].get<int>();
        }
        by_name[e.name] = (int)g.edges.size();
        g.edges.push_back(e);
    }
    for (const auto& jr : j.at("rotations")) {
        std::vector<EndRef> rot;
        for (const auto& s : jr) {
            std::string id = s.get<std::string>();
            char tail = id.back();
            std::string name = id.substr(0, id.size() - 1);
            if (!by_name.count(name)) throw StructuralError("rotation names unknown edge");
            rot.push_back(EndRef{by_name[name], tail == '+' ? 0 : 1});
        }
        g.rotations.push_back(std::move(rot));
    }
    g.validate();
    return g;
}

}  // namespace punctorus
