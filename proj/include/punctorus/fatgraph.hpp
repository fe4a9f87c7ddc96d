#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace punctorus {

// Error taxonomy shared across modules.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GcdViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedFamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NullHomologousError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Sign { unset, positive, negative };

// One of the two ends of an edge: end 0 is the tail, end 1 the head.
struct EndRef {
    int edge = -1;
    int end = -1;
    bool operator==(const EndRef&) const = default;
    bool operator<(const EndRef& o) const {
        return edge != o.edge ? edge < o.edge : end < o.end;
    }
};

// A directed traversal of an edge: dir 0 runs tail->head, dir 1 head->tail.
struct DirEdge {
    int edge = -1;
    int dir = 0;
    bool operator==(const DirEdge&) const = default;
    int id() const { return 2 * edge + dir; }
    EndRef out_end() const { return {edge, dir}; }
    EndRef in_end() const { return {edge, 1 - dir}; }
    DirEdge reversed() const { return {edge, 1 - dir}; }
};

struct Edge {
    std::string name;
    int vertex[2] = {0, 0};  // 1-based vertex of tail / head
    Sign sign = Sign::unset;
    int label[2] = {0, 0};  // optional endpoint labels in 1..t, 0 = absent
};

// Primitive integer pair up to sign; the homology class of an essential
// circle on the capped torus.
struct SlopeClass {
    long long p = 0;
    long long q = 0;
    static SlopeClass normalized(long long p, long long q);
    bool operator==(const SlopeClass&) const = default;
};

long long delta(const SlopeClass& a, const SlopeClass& b);

// Open interval (left, right) on an oriented vertex circle: the arc swept
// from the end of `left` to the end of `right` in the rotation direction.
struct IntervalSpec {
    int vertex = 0;
    EndRef left;
    EndRef right;
};

// A corner is the gap between rotation slot `gap` and slot `gap+1` (mod
// degree) on a vertex circle.
struct CornerRef {
    int vertex = 0;
    int gap = 0;
    bool operator==(const CornerRef&) const = default;
    bool operator<(const CornerRef& o) const {
        return vertex != o.vertex ? vertex < o.vertex : gap < o.gap;
    }
};

struct FaceTrace {
    // Directed edge-sides per face circuit, in traversal order.
    std::vector<std::vector<DirEdge>> circuits;
    // face id of every directed edge, indexed by DirEdge::id().
    std::vector<int> face_of_dir;
    // face id of every corner: corner_face[v-1][gap].
    std::vector<std::vector<int>> corner_face;

    int face_count() const { return (int)circuits.size(); }
    // Number of edge-sides of a face.
    int length(int f) const { return (int)circuits[f].size(); }
};

// A graph embedded in a closed oriented surface via a rotation system.
// Rotations list edge-ends in the positive (orientation-induced) cyclic
// order around each fat vertex.
class EmbeddedGraph {
public:
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<EndRef>> rotations;  // index v-1

    // Structural checks: every end appears exactly once, vertex data
    // consistent with rotations. Throws StructuralError.
    void validate() const;

    int edge_count() const { return (int)edges.size(); }
    int degree(int v) const { return (int)rotations[v - 1].size(); }
    int vertex_of(const EndRef& e) const { return edges[e.edge].vertex[e.end]; }
    int edge_index(const std::string& name) const;
    const Edge& edge_named(const std::string& name) const { return edges[edge_index(name)]; }

    // Position of an end in its vertex rotation.
    int slot_of(const EndRef& e) const;
    EndRef at(int v, int slot) const;
    EndRef rotation_succ(const EndRef& e) const;
    EndRef rotation_pred(const EndRef& e) const;

    bool connected() const;

    FaceTrace trace_faces() const;
    int genus() const;                 // throws if disconnected or non-integer
    bool toroidal_cellular() const;    // connected and genus 1

    // Tightest interval containing an end: (rotation predecessor, successor).
    IntervalSpec interval_of(const EndRef& e) const;

    // All corners strictly inside the open interval, in rotation order
    // starting after `left`.
    std::vector<CornerRef> corners_in_interval(const IntervalSpec& iv) const;

    // Insert a new edge with its tail in corner `tail_gap` and head in
    // corner `head_gap` (distinct vertices required). Gap indices refer to
    // this graph's rotations before insertion.
    EmbeddedGraph with_edge(const Edge& e, const CornerRef& tail_gap,
                            const CornerRef& head_gap) const;
    EmbeddedGraph without_edge(const std::string& name) const;

    // Label-preserving equality of embedded graphs: same vertices, same
    // named edges with equal endpoints, rotations equal as cyclic words.
    bool labeled_equal(const EmbeddedGraph& other) const;

    // Partition of edge indices into parallelism classes (transitive
    // closure of "cobounds a bigon disk face"). Requires cellular genus<=1.
    std::vector<std::vector<int>> parallelism_classes() const;
    std::vector<int> class_sizes() const;  // sorted descending

    // One representative edge per parallelism class, annotated with size.
    struct Reduced;
    Reduced reduced_graph() const;

    // Homology class of a closed cycle (edge names) in the capped surface.
    SlopeClass cycle_slope(const std::vector<std::string>& cycle_edges) const;

    std::string to_dot() const;
    std::string to_json() const;
    static EmbeddedGraph from_json(const std::string& text);

private:
    struct HomologyBasis;
    const HomologyBasis& homology() const;
    mutable std::shared_ptr<HomologyBasis> homology_cache_;
};

struct EmbeddedGraph::Reduced {
    EmbeddedGraph graph;
    std::vector<int> sizes;  // aligned with graph.edges
};

}  // namespace punctorus
