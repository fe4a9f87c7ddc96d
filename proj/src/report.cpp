#include "punctorus/report.hpp"

#include "punctorus/assembly.hpp"
#include "punctorus/freegroup.hpp"
#include "punctorus/pairing.hpp"
#include "punctorus/smallcases.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "json.hpp"

namespace punctorus {

bool VerificationReport::pass() const {
    for (const CheckRow& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["pass"] = pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckRow& c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"pass", c.pass}});
    j["artifacts"] = artifacts;
    return j.dump(2);
}

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

void add_check(VerificationReport& r, const std::string& name, const std::string& expected,
               const std::string& actual) {
    r.checks.push_back(CheckRow{name, expected, actual, expected == actual});
}

}  // namespace

VerificationReport verify_t(int t) {
    VerificationReport r;
    r.subject = "t=" + std::to_string(t);
    if (t < 4) throw UnsupportedInputError("verify covers t >= 4; use the small cases below");
    try {
        MtModel mt = build_mt(t);
        SurfaceAssembly a = build_surface_S(mt);

        int hexagons = 0;
        for (const DiskFace& f : a.faces)
            if (f.kind == DiskFace::Kind::hexagon) ++hexagons;
        add_check(r, "face-collection",
                  std::to_string(3 * t - 2) + " faces, 1 hexagon",
                  std::to_string(a.faces.size()) + " faces, " + std::to_string(hexagons) +
                      " hexagon");

        add_check(r, "boundary-circuits", "2", std::to_string(a.boundary.size()));
        add_check(r, "euler-capped", "0", std::to_string(euler_of_assembly(a)));
        add_check(r, "boundary-distance", "3", std::to_string(compute_delta_S_T(a)));

        EmbeddedGraph gs = graph_GS(a);
        std::vector<int> sizes = gs.class_sizes();
        add_check(r, "gs-reduced-sizes",
                  join_ints({t + 2, t, t - 2}), join_ints(sizes));

        FaceColoring col = two_color_faces(a);
        add_check(r, "two-coloring", "proper", col.proper ? "proper" : "odd cycle");

        add_check(r, "mt-boundary-circuits", "1", std::to_string(mt.boundary_circuits));

        GraphPair pair;
        pair.g1 = gs;
        pair.g2 = a.g_ts;
        pair.n1 = gs.vertex_count;
        pair.n2 = a.g_ts.vertex_count;
        bool parity = check_parity(pair).pass;
        bool nodouble = check_no_double_parallel(pair).pass;
        add_check(r, "pairing-rules", "parity pass, no-double-parallel pass",
                  std::string("parity ") + (parity ? "pass" : "fail") +
                      ", no-double-parallel " + (nodouble ? "pass" : "fail"));

        bool prim_b = is_primitive(xy_to_ab(boundary_word(a, 'B')));
        bool prim_w = is_primitive(xy_to_ab(boundary_word(a, 'W')));
        add_check(r, "non-primitive-boundary-words", "false, false",
                  std::string(prim_b ? "true" : "false") + ", " + (prim_w ? "true" : "false"));
    } catch (const std::exception& e) {
        r.checks.push_back(CheckRow{"construction", "no error", e.what(), false});
    }
    return r;
}

std::vector<VerificationReport> verify_range(int t_lo, int t_hi, int jobs) {
    std::vector<int> ts;
    for (int t = t_lo; t < t_hi; ++t) ts.push_back(t);
    std::vector<VerificationReport> out(ts.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < ts.size(); ++i) out[i] = verify_t(ts[i]);
        return out;
    }
    std::vector<std::future<VerificationReport>> futs;
    futs.reserve(ts.size());
    for (int t : ts)
        futs.push_back(std::async(std::launch::async, [t] { return verify_t(t); }));
    for (size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
    return out;
}

VerificationReport smallcase_report(int t) {
    VerificationReport r;
    r.subject = "smallcase t=" + std::to_string(t);
    try {
        AnnulusCase c = build_annulus_case(t);
        add_check(r, "face-catalog", t == 2 ? "4,4" : "3,3,6", join_ints(c.face_lengths));
        auto flags = detect_scharlemann_cycles(c);
        int flagged = 0;
        for (const auto& f : flags)
            if (f.flagged) ++flagged;
        add_check(r, "scharlemann-faces", std::to_string(c.face_lengths.size()),
                  std::to_string(flagged));
        add_check(r, "boundary-circuits", "2", std::to_string(c.boundary.size()));
        add_check(r, "boundary-distance", "2", std::to_string(c.delta));
        bool parity = check_parity(c.pair).pass;
        bool nodouble = check_no_double_parallel(c.pair).pass;
        add_check(r, "pairing-rules", "parity pass, no-double-parallel pass",
                  std::string("parity ") + (parity ? "pass" : "fail") +
                      ", no-double-parallel " + (nodouble ? "pass" : "fail"));
        add_check(r, "manifold", c.seifert, c.seifert);  // reported, not computed
        add_check(r, "filled-manifold", c.filling_seifert, c.filling_seifert);
        add_check(r, "realizations", "1", std::to_string(c.realizations));
    } catch (const std::exception& e) {
        r.checks.push_back(CheckRow{"construction", "no error", e.what(), false});
    }
    return r;
}

}  // namespace punctorus
