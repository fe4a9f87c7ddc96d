#pragma once

#include "punctorus/cutmodel.hpp"

#include <map>
#include <vector>

namespace punctorus {

// Combinatorial model of the boundary surface of the cut handlebody: the two
// graph-bearing torus copies joined by the string annuli, subdivided by the
// corners of a disk family. Regions, cutting along disk boundaries, and the
// complement two-coloring all live here.
class SurfaceComplex {
public:
    // g1 and g2 share the vertex set 1..t. Every disk side must reference an
    // edge of the corresponding copy; the corner system must be realizable
    // (order-preserving across each string), which is validated on build.
    SurfaceComplex(EmbeddedGraph g1, EmbeddedGraph g2, std::vector<DiskFace> disks, int t);

    int euler() const;  // of the closed boundary surface

    // Components of the boundary surface cut along the boundary circles of
    // the selected disks (indices into the disk list).
    int cut_component_count(const std::vector<int>& disk_subset) const;
    bool cuts_to_single_planar_piece(const std::vector<int>& disk_subset) const;

    struct Coloring {
        bool ok = false;
        // color (0/1) per face id of each copy's trace; empty when !ok
        std::vector<int> face_color_copy1;
        std::vector<int> face_color_copy2;
        std::vector<int> witness_regions;  // odd constraint cycle when !ok
    };
    // Two-color the complement pieces so every disk has opposite colors on
    // its two sides. identify_copies glues face f of copy 1 to face f of
    // copy 2 (the psi identification), which is what the quotient needs.
    Coloring two_color(bool identify_copies) const;

    const FaceTrace& trace(int copy) const { return copy == 1 ? ft1_ : ft2_; }
    const EmbeddedGraph& graph(int copy) const { return copy == 1 ? g1_ : g2_; }
    const std::vector<std::vector<Corner>>& strings() const { return strings_; }

private:
    EmbeddedGraph g1_, g2_;
    std::vector<DiskFace> disks_;
    int t_;
    FaceTrace ft1_, ft2_;
    std::vector<std::vector<Corner>> strings_;

    // 2-cell node ids: copy-1 faces, copy-2 faces, rectangles
    int n_faces1_ = 0, n_faces2_ = 0, n_rects_ = 0;
    int rect_base(int x, int k) const;
    int rect_of_arc(int copy, int v, int gap) const;
    int face_node(int copy, int f) const;

    struct OneCell {
        int flank_a = -1, flank_b = -1;  // 2-cell nodes
        int disk = -1;                   // disk whose boundary uses this cell, -1 if none
    };
    std::vector<OneCell> cells_;

    void build_cells();
};

// Partner map of a disk family: each copy-1 end is joined by a corner to a
// copy-2 end. Orbits of this map are the boundary circuits of the surface
// obtained by gluing the disks along psi-identified edges.
std::map<NamedEnd, NamedEnd> partner_map(const std::vector<DiskFace>& disks);
std::vector<std::vector<NamedEnd>> boundary_orbits(const std::vector<DiskFace>& disks);

// Plain bipartite 2-coloring of a constraint graph: nodes 0..n-1, edges that
// force equality or inequality. Returns colors or an odd cycle witness.
struct BipartiteResult {
    bool ok = false;
    std::vector<int> color;
    std::vector<int> witness;
};
BipartiteResult two_color_constraints(int n, const std::vector<std::pair<int, int>>& same,
                                      const std::vector<std::pair<int, int>>& opposite);

}  // namespace punctorus
