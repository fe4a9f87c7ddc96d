#pragma once

#include "punctorus/cutmodel.hpp"
#include "punctorus/surface_complex.hpp"

#include <string>
#include <vector>

namespace punctorus {

// The closed-up manifold built from the non-slidable completion: the cut
// model plus the chosen completion, with its boundary circuit data.
struct MtModel {
    int t = 0;
    CutModel cut;
    Completion completion;
    int boundary_circuits = 0;  // components of the string torus, always 1
    std::string to_json() const;
};

MtModel build_mt(int t);

// The twice-punctured torus assembled from the enlarged face collection:
// bigons parallel to the original system plus one hexagonal face, glued
// along psi-identified edges.
struct SurfaceAssembly {
    int t = 0;
    EmbeddedGraph g_ts;  // enlarged graph on T: 3t edges, all vertices degree 6
    std::vector<DiskFace> faces;
    std::vector<std::vector<Corner>> strings;
    std::vector<std::vector<NamedEnd>> boundary;  // [0] = the circuit through e1's tail
    FaceTrace trace;                              // faces of g_ts
    std::vector<int> face_color;                  // 0 = black, 1 = white per face id
    int hexagon_face = -1;                        // index into `faces`

    std::string to_json() const;
};

SurfaceAssembly build_surface_S(const MtModel& mt);
SurfaceAssembly build_surface_S(int t);

std::vector<std::vector<NamedEnd>> trace_boundary(const SurfaceAssembly& a);

// Euler characteristic of the capped surface; 0 identifies the torus.
int euler_of_assembly(const SurfaceAssembly& a);
int euler_with_face_count(const SurfaceAssembly& a, int face_count);

// Boundary-slope distance by degree counting: uniform vertex degree divided
// by the number of boundary circuits of the assembled surface.
int compute_delta_S_T(const SurfaceAssembly& a);
int delta_from_degrees(const EmbeddedGraph& g, int boundary_count);

struct FaceColoring {
    bool proper = false;
    std::vector<int> color;            // per face id of the host trace
    std::vector<int> witness_regions;  // when not proper
};
FaceColoring two_color_faces(const SurfaceAssembly& a);

// Abstract graph of the assembled surface: two vertices (the boundary
// circuits), the same edge names, rotations given by the circuit order.
EmbeddedGraph graph_GS(const SurfaceAssembly& a);

// Generic form shared with the small-case annuli: the host graph's edges on
// vertices given by the boundary circuits, rotations in circuit order, with
// the orientation convention pinned by the expected face count (the faces of
// the abstract graph are exactly the glued disks).
EmbeddedGraph abstract_boundary_graph(const EmbeddedGraph& host,
                                      const std::vector<std::vector<NamedEnd>>& orbits,
                                      int expected_faces);

// Word spelled by the chosen boundary circuit against the two-disk system of
// one side: 'B' reads the black bigon x at e2 and the black t-sided face y
// at e(t+2); 'W' reads the white bigon X at v3/v4 and the white (t+4)-sided
// face Y at e(t+2). Letters x/y (B side) or X/Y in lowercase=positive form.
std::string boundary_word(const SurfaceAssembly& a, char side);

// Map an x/y word onto the free-group alphabet a/b.
std::string xy_to_ab(const std::string& w);

}  // namespace punctorus
