#include "punctorus/pairing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace punctorus {

void GraphPair::validate() const {
    std::set<std::string> names1, names2;
    for (const Edge& e : g1.edges) {
        if (e.sign == Sign::unset)
            throw StructuralError("edge " + e.name + " has no sign on side 1");
        names1.insert(e.name);
    }
    for (const Edge& e : g2.edges) {
        if (e.sign == Sign::unset)
            throw StructuralError("edge " + e.name + " has no sign on side 2");
        names2.insert(e.name);
    }
    if (names1 != names2) throw StructuralError("edge sets of the pair do not match");
    if (names1.size() != g1.edges.size() || names2.size() != g2.edges.size())
        throw StructuralError("duplicate edge names in the pair");
    if (n1 != g1.vertex_count || n2 != g2.vertex_count)
        throw StructuralError("boundary counts do not match the graphs");
}

ParityReport check_parity(const GraphPair& p) {
    p.validate();
    ParityReport r;
    for (const Edge& e : p.g1.edges) {
        const Edge& f = p.g2.edge_named(e.name);
        if (e.sign == f.sign) r.violating.push_back(e.name);
    }
    std::sort(r.violating.begin(), r.violating.end());
    r.pass = r.violating.empty();
    return r;
}

std::string ParityReport::to_json() const {
    nlohmann::ordered_json j;
    j["rule"] = "parity";
    j["pass"] = pass;
    j["violating_edges"] = violating;
    return j.dump();
}

DoubleParallelReport check_no_double_parallel(const GraphPair& p) {
    p.validate();
    auto class_id_by_name = [](const EmbeddedGraph& g) {
        std::map<std::string, int> id;
        auto classes = g.parallelism_classes();
        for (size_t c = 0; c < classes.size(); ++c)
            for (int e : classes[c]) id[g.edges[e].name] = (int)c;
        return id;
    };
    auto id1 = class_id_by_name(p.g1);
    auto id2 = class_id_by_name(p.g2);
    DoubleParallelReport r;
    std::vector<std::string> names;
    for (const Edge& e : p.g1.edges) names.push_back(e.name);
    std::sort(names.begin(), names.end());
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (id1[names[i]] == id1[names[j]] && id2[names[i]] == id2[names[j]])
                r.violating.emplace_back(names[i], names[j]);
    r.pass = r.violating.empty();
    return r;
}

std::string DoubleParallelReport::to_json() const {
    nlohmann::ordered_json j;
    j["rule"] = "no-double-parallelism";
    j["pass"] = pass;
    j["violating_pairs"] = nlohmann::ordered_json::array();
    for (auto& [a, b] : violating) j["violating_pairs"].push_back({a, b});
    return j.dump();
}

EdgeFamily EdgeFamily::from_graph(const EmbeddedGraph& g,
                                  const std::vector<std::string>& names, int t) {
    EdgeFamily f;
    f.t = t;
    f.edge_names = names;
    for (const std::string& n : names) {
        const Edge& e = g.edge_named(n);
        if (e.label[0] == 0 || e.label[1] == 0)
            throw MalformedFamilyError("edge " + n + " carries no endpoint labels");
        f.labels.emplace_back(e.label[0], e.label[1]);
    }
    return f;
}

EdgeFamily reversed_family(const EdgeFamily& f) {
    EdgeFamily r = f;
    r.reversed = !f.reversed;
    for (auto& [a, b] : r.labels) std::swap(a, b);
    return r;
}

int induced_permutation(const EdgeFamily& f) {
    if (f.edge_names.size() < 2) throw MalformedFamilyError("a family needs at least 2 edges");
    if (f.labels.size() != f.edge_names.size())
        throw MalformedFamilyError("label table does not match the family");
    const int t = f.t;
    if (t < 1) throw MalformedFamilyError("bad modulus");
    if (t == 1) return 1;  // the trefoil-exterior degenerate case
    auto mod = [&](int x) { return ((x - 1) % t + t) % t + 1; };
    int alpha = ((f.labels[0].second - f.labels[0].first) % t + t) % t;
    int origin = ((f.labels[0].first - 1) % t + t) % t;  // label of e_1 minus 1
    for (size_t i = 0; i < f.labels.size(); ++i) {
        int expect_tail = mod(origin + 1 + (int)i);
        if (f.labels[i].first != expect_tail)
            throw MalformedFamilyError("family labels are not consecutive at " +
                                       f.edge_names[i]);
        int a = ((f.labels[i].second - f.labels[i].first) % t + t) % t;
        if (a != alpha)
            throw MalformedFamilyError("family does not induce a single shift at " +
                                       f.edge_names[i]);
    }
    if (alpha == 0 || std::gcd(t, alpha) != 1)
        throw GcdViolationError("induced shift " + std::to_string(alpha) +
                                " violates gcd(t, alpha) = 1");
    return alpha;
}

Positivity positivity_witness(const GraphPair& p, const EdgeFamily& f) {
    p.validate();
    // the family must live on one side of the pair
    for (const std::string& n : f.edge_names) p.g1.edge_index(n);
    return (int)f.edge_names.size() >= f.t + 1 ? Positivity::positive
                                               : Positivity::inconclusive;
}

}  // namespace punctorus
