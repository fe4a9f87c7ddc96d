#pragma once

#include "punctorus/fatgraph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace punctorus {

// Two graphs sharing one edge set (matched by name), each carrying signs.
struct GraphPair {
    EmbeddedGraph g1;  // the surface-side graph (negative edges here)
    EmbeddedGraph g2;  // the torus-side graph (positive edges here)
    int n1 = 0;        // |boundary| of the first surface = vertex count of g1
    int n2 = 0;

    void validate() const;  // name bijection total, signs present both sides
};

struct ParityReport {
    bool pass = false;
    std::vector<std::string> violating;
    std::string to_json() const;
};

// Parity rule: a shared edge is positive on one side iff negative on the
// other.
ParityReport check_parity(const GraphPair& p);

struct DoubleParallelReport {
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> violating;
    std::string to_json() const;
};

// No two edges are parallel in both graphs.
DoubleParallelReport check_no_double_parallel(const GraphPair& p);

// A family of mutually parallel, consecutive, negative edges with endpoint
// labels read around the torus-side vertices.
struct EdgeFamily {
    std::vector<std::string> edge_names;            // in family order
    std::vector<std::pair<int, int>> labels;        // (tail, head) labels in 1..t
    int t = 0;                                      // modulus
    bool reversed = false;

    static EdgeFamily from_graph(const EmbeddedGraph& g,
                                 const std::vector<std::string>& names, int t);
};

EdgeFamily reversed_family(const EdgeFamily& f);

// Shift alpha of the permutation x -> x + alpha induced by the family.
// Throws MalformedFamilyError on inconsistent labels and GcdViolationError
// when gcd(t, alpha) != 1.
int induced_permutation(const EdgeFamily& f);

enum class Positivity { positive, inconclusive };

// Syntactic witness: a family of n+1 parallel negative edges certifies that
// the torus with n boundary components is positive.
Positivity positivity_witness(const GraphPair& p, const EdgeFamily& f);

}  // namespace punctorus
