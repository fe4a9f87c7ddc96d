#pragma once

#include "punctorus/assembly.hpp"
#include "punctorus/pairing.hpp"

#include <string>
#include <vector>

namespace punctorus {

// Fixed verification for t = 2, 3: the non-slidable completion closes up to
// a neutral annulus meeting the torus in 2t edges and 2t disk faces.
struct AnnulusCase {
    int t = 0;
    EmbeddedGraph g_t;  // graph on the torus side (2t edges)
    EmbeddedGraph g_a;  // abstract graph on the annulus (2 vertices)
    GraphPair pair;
    std::vector<DiskFace> disks;
    std::vector<std::vector<NamedEnd>> boundary;  // the two annulus boundary circuits
    std::vector<int> face_lengths;                // catalog of torus-side face lengths
    std::vector<int> face_color;                  // side of each torus-side face
    int delta = 0;                                // boundary distance by degree count
    std::string seifert;                          // reported literature identification
    std::string filling_seifert;
    int realizations = 1;  // number of valid constructions found

    std::string to_json() const;
};

AnnulusCase build_annulus_case(int t);

struct ScharlemannInfo {
    int face = -1;
    int length = 0;
    bool flagged = false;
    int w_from = 0, w_to = 0;  // the common ordered label pair when flagged
};

// Flag torus-side disk faces all of whose edge sides cross the annulus the
// same way (a single ordered pair of consecutive annulus-side labels).
std::vector<ScharlemannInfo> detect_scharlemann_cycles(const EmbeddedGraph& g_t,
                                                       const EmbeddedGraph& g_a);
std::vector<ScharlemannInfo> detect_scharlemann_cycles(const AnnulusCase& c);

struct ScanSolution {
    int n = 0, t = 0, delta = 0;
    bool operator==(const ScanSolution&) const = default;
};

// Arithmetic scan behind the distance >= 6 bound: vertices of degree n whose
// n incident reduced edges all reach size t+2 force delta * t = n * (t + 2).
std::vector<ScanSolution> corr2_scan(int t_lo, int t_hi, int n_max, int delta_min);

struct Corr2Result {
    int ai_placements = 0;    // embeddings of the second-family edge a_i
    int aim1_placements = 0;  // embeddings of its bigon partner, all a_i
};

// The t = 4, delta = 6 configuration: embed the constrained second-family
// edge into the non-slidable completion and count placements of its bigon
// partner derived by corner transfer. Zero certifies the contradiction.
// sigma_plus selects the x -> x+1 second family (x -> x-1 otherwise);
// relaxed drops the non-parallelism forced by a size-6 second family.
Corr2Result corr2_t4_contradiction(bool sigma_plus, bool relaxed);

}  // namespace punctorus
