#pragma once

#include "punctorus/fatgraph.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace punctorus {

// An end referenced by edge name; end 0 = tail, 1 = head.
struct NamedEnd {
    std::string edge;
    int end = 0;
    bool operator==(const NamedEnd&) const = default;
    bool operator<(const NamedEnd& o) const {
        return edge != o.edge ? edge < o.edge : end < o.end;
    }
};

// Interval on a vertex circle with bounds given by named ends, so it can be
// read against either torus copy.
struct NamedInterval {
    int vertex = 0;
    NamedEnd left;
    NamedEnd right;
};

IntervalSpec to_interval(const EmbeddedGraph& g, const NamedInterval& iv);

// A side of a disk face: an edge drawn on copy 1 (T^1, bottom) or copy 2
// (T^2, top) of the cut-open torus.
struct EdgeSideRef {
    std::string edge;
    int copy = 1;
};

// A corner arc inside the string I'_{x,x+1}: it joins an end on the copy-1
// circle of vertex x to an end on the copy-2 circle of vertex x+1.
struct Corner {
    NamedEnd one_side;  // end on T^1 at vertex string_x
    NamedEnd two_side;  // end on T^2 at vertex string_x + 1
    int string_x = 0;
    int position = -1;  // index along the string, filled by the model builder
    bool operator==(const Corner& o) const {
        return one_side == o.one_side && two_side == o.two_side && string_x == o.string_x;
    }
};

struct DiskFace {
    enum class Kind { bigon, hexagon, other };
    std::vector<EdgeSideRef> sides;  // cyclic, copies alternate
    std::vector<Corner> corners;     // corner i follows side i
    Kind kind = Kind::other;
};

// Resolve the boundary walk of a disk whose sides are given as edge
// references on alternating copies: orient the sides so consecutive ends are
// joined by corners running from vertex x on T^1 to vertex x+1 on T^2.
// `endpoints` maps edge name -> (tail vertex, head vertex).
// Throws StructuralError if no consistent walk exists.
std::vector<Corner> resolve_disk_walk(const std::vector<EdgeSideRef>& sides,
                                      const std::map<std::string, std::pair<int, int>>& endpoints,
                                      int t);

// Corner order along every string, derived from the two rotations and the
// disk pairing; validates that the corners can be drawn disjoint (cyclic
// orders agree across each string). Fills Corner::position inside `disks`.
std::vector<std::vector<Corner>> derive_strings(const EmbeddedGraph& g1,
                                                const EmbeddedGraph& g2,
                                                std::vector<DiskFace>& disks, int t);

std::map<std::string, std::pair<int, int>> endpoint_table(
    std::initializer_list<const EmbeddedGraph*> graphs);

// The cut manifold T x I presented combinatorially: two marked torus copies,
// the bigon system, and the derived corner order along the strings.
struct CutModel {
    int t = 0;
    int alpha = 0;
    EmbeddedGraph g_bot;  // graph on T^1: edges e1 .. e(t+1)
    EmbeddedGraph g_top;  // graph on T^2: edges e2 .. e(t+2)
    std::vector<DiskFace> faces;
    std::vector<std::vector<Corner>> strings;  // strings[x-1] = corners of I'_{x,x+1}

    std::string to_json() const;
};

// Standard layout of the bigon system: gamma_1 horizontal on T^1 and its
// shift on T^2, wrap edges e(t+1) / e(t+2). The embedding of e1 in T^2 is
// not part of the model; it is the unknown the enumeration resolves.
CutModel build_standard_cut_model(int t, int alpha);

// The family graph on one torus copy: edges e(first) .. e(first+t) with
// e(first+k) joining vertex labels first+k -> first+k+alpha (mod t), the
// first t of them forming a horizontal essential cycle and the last one
// wrapping around the complementary direction.
EmbeddedGraph standard_strip_graph(int t, int alpha, int first_index);

// psi-equivariant transfer: intervals of the named edge's endpoints read off
// one copy, reported against the other copy (same edge names).
std::vector<NamedInterval> transfer_constraints(const CutModel& m, const std::string& edge);

struct Completion {
    EmbeddedGraph graph;  // all t+2 family edges on the capped torus
    CornerRef tail_slot;  // placement of e1's tail in g_top
    CornerRef head_slot;
    bool slidable = false;
    SlopeClass slope_a;  // slope of e1 u e(t+1)
    SlopeClass slope_b;  // slope of e2 u e(t+2)
    long long delta_value = -1;
};

// All embeddings of e1 into T^2 (and, forced, e(t+2) into T^1) compatible
// with the standard model: deterministic order, lexicographic on slots.
// An empty result is a meaningful outcome, not an error.
std::vector<Completion> enumerate_completions(const CutModel& m);

bool is_slidable(const Completion& c);

// Placement slots for a further family edge adjacent to e1 (before) or to
// e(t+2) (after), derived by corner transfer across the strings. Each entry
// is a valid (tail corner, head corner) pair in the completion graph.
std::vector<std::pair<CornerRef, CornerRef>> extension_placements(const CutModel& m,
                                                                  const Completion& c,
                                                                  bool after);

struct ExtensionBound {
    bool bounded = false;  // true when neither side admits a placement
    int value = 0;         // t+2 when bounded
};

// Size bound for the maximal parallel family through a non-slidable
// completion. Slidable completions are reported unbounded by this test.
ExtensionBound max_extension(const CutModel& m, const Completion& c);

// Cut the boundary surface of the handlebody along the boundaries of the
// listed disks (all of them by default) and test for a single planar piece.
bool check_complete_disk_system(const CutModel& m);
bool check_disk_system_subset(const CutModel& m, const std::vector<int>& face_indices);

// Orientation reversal: the mirror model for alpha -> t - alpha. Used to
// confirm that reversed families give mirrored enumerations.
EmbeddedGraph mirror_graph(const EmbeddedGraph& g);

// Admissible interval for the end of a new edge whose bigon corner pairs it
// with `known` across a string: the known end lies in a gap between matched
// family ends (indices idx_lo..idx_hi); the new end must lie in the
// corresponding partner gap on the neighboring circle.
NamedInterval corner_transfer_interval(const EmbeddedGraph& g, const NamedEnd& known, int t,
                                       bool known_on_copy2, int idx_lo, int idx_hi);

int family_index(const std::string& edge_name);
std::string family_edge_name(int index);

}  // namespace punctorus
