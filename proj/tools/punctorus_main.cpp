#include "CLI11.hpp"
#include "json.hpp"

#include "punctorus/assembly.hpp"
#include "punctorus/freegroup.hpp"
#include "punctorus/report.hpp"
#include "punctorus/smallcases.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace punctorus;

namespace {

struct RangeSpec {
    int lo = 0, hi = 0;  // inclusive-exclusive
    bool set = false;
};

RangeSpec parse_range(const std::string& s) {
    RangeSpec r;
    auto pos = s.find("..");
    if (pos == std::string::npos) throw CLI::ValidationError("--t-range", "expected A..B");
    r.lo = std::stoi(s.substr(0, pos));
    r.hi = std::stoi(s.substr(pos + 2));
    if (r.hi <= r.lo) throw CLI::ValidationError("--t-range", "empty range");
    r.set = true;
    return r;
}

std::string default_out_dir() {
    const char* env = std::getenv("OUTPUT_DIR");
    return env && *env ? env : "./out";
}

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    os << text;
    if (!os) throw std::runtime_error("cannot write " + path.string());
    std::cout << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial verification of intersection graphs of punctured tori"};
    app.require_subcommand(1);
    std::string out_dir = default_out_dir();

    // verify
    auto* verify = app.add_subcommand("verify", "run the per-t verification battery");
    int v_t = -1;
    std::string v_range;
    int v_jobs = 1;
    verify->add_option("--t", v_t, "single t (>= 4)");
    verify->add_option("--t-range", v_range, "range A..B, inclusive-exclusive");
    verify->add_option("--jobs", v_jobs, "parallel workers for range sweeps");
    verify->add_option("--out-dir", out_dir, "report directory");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list completions for (t, alpha)");
    int e_t = 0, e_alpha = 0;
    enumerate->add_option("--t", e_t, "t >= 2")->required();
    enumerate->add_option("--alpha", e_alpha, "shift with gcd(t, alpha) = 1")->required();

    // emit
    auto* emit = app.add_subcommand("emit", "write graph or model artifacts");
    std::string subject, format = "json";
    int m_t = 0, m_alpha = 1;
    emit->add_option("subject", subject, "gts | gs | mt | completion")->required();
    emit->add_option("--t", m_t, "t")->required();
    emit->add_option("--alpha", m_alpha, "alpha for mt/completion subjects");
    emit->add_option("--format", format, "dot | json")
        ->check(CLI::IsMember({"dot", "json"}));
    emit->add_option("--out-dir", out_dir, "output directory");

    // smallcase
    auto* small = app.add_subcommand("smallcase", "t = 2, 3 annulus verification");
    int s_t = 0;
    small->add_option("--t", s_t, "2 or 3")->required();

    // scan
    auto* scan = app.add_subcommand("scan", "arithmetic scan behind the distance bound");
    int c_tmax = 1000, c_nmax = 4, c_dmin = 6;
    scan->add_option("--t-max", c_tmax, "largest t scanned");
    scan->add_option("--n-max", c_nmax, "largest reduced degree");
    scan->add_option("--delta-min", c_dmin, "smallest distance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            if (v_t < 0 && v_range.empty()) {
                std::cerr << "verify needs --t or --t-range\n";
                return 2;
            }
            if (v_t >= 0 && v_t < 4) {
                std::cerr << "verify covers t >= 4; use `smallcase --t " << v_t
                          << "` for the annulus cases\n";
                return 2;
            }
            std::vector<VerificationReport> reports;
            auto start = std::chrono::steady_clock::now();
            if (!v_range.empty()) {
                RangeSpec r = parse_range(v_range);
                if (r.lo < 4) {
                    std::cerr << "verify ranges start at t = 4\n";
                    return 2;
                }
                reports = verify_range(r.lo, r.hi, v_jobs);
            } else {
                reports.push_back(verify_t(v_t));
            }
            bool all = true;
            for (const auto& rep : reports) {
                write_file(fs::path(out_dir) / (rep.subject + ".json"), rep.to_json() + "\n");
                std::cout << (rep.pass() ? "PASS " : "FAIL ") << rep.subject << " ("
                          << rep.checks.size() << " checks)\n";
                all = all && rep.pass();
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            std::cerr << "verify took " << ms << " ms\n";
            return all ? 0 : 1;
        }

        if (*enumerate) {
            CutModel m = build_standard_cut_model(e_t, e_alpha);
            auto comps = enumerate_completions(m);
            nlohmann::ordered_json j;
            j["t"] = e_t;
            j["alpha"] = e_alpha;
            j["completions"] = nlohmann::ordered_json::array();
            for (const Completion& c : comps) {
                nlohmann::ordered_json jc;
                jc["tail_slot"] = {c.tail_slot.vertex, c.tail_slot.gap};
                jc["head_slot"] = {c.head_slot.vertex, c.head_slot.gap};
                jc["slidable"] = c.slidable;
                jc["delta"] = c.delta_value;
                jc["graph"] = nlohmann::ordered_json::parse(c.graph.to_json());
                j["completions"].push_back(jc);
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*emit) {
            fs::path dir(out_dir);
            if (subject == "gts" || subject == "gs") {
                SurfaceAssembly a = build_surface_S(m_t);
                EmbeddedGraph g = subject == "gts" ? a.g_ts : graph_GS(a);
                std::string text = format == "dot" ? g.to_dot() : g.to_json() + "\n";
                write_file(dir / (subject + "-t" + std::to_string(m_t) + "." + format), text);
            } else if (subject == "mt") {
                if (format == "dot") {
                    CutModel m = build_standard_cut_model(m_t, m_alpha);
                    write_file(dir / ("mt-t" + std::to_string(m_t) + "-bot.dot"),
                               m.g_bot.to_dot());
                    write_file(dir / ("mt-t" + std::to_string(m_t) + "-top.dot"),
                               m.g_top.to_dot());
                } else {
                    CutModel m = build_standard_cut_model(m_t, m_alpha);
                    write_file(dir / ("mt-t" + std::to_string(m_t) + ".json"),
                               m.to_json() + "\n");
                }
            } else if (subject == "completion") {
                CutModel m = build_standard_cut_model(m_t, m_alpha);
                auto comps = enumerate_completions(m);
                for (size_t i = 0; i < comps.size(); ++i) {
                    std::string stem = "completion-t" + std::to_string(m_t) + "-a" +
                                       std::to_string(m_alpha) + "-" + std::to_string(i);
                    if (format == "dot")
                        write_file(dir / (stem + ".dot"), comps[i].graph.to_dot());
                    else
                        write_file(dir / (stem + ".json"), comps[i].graph.to_json() + "\n");
                }
            } else {
                std::cerr << "unknown emit subject: " << subject << "\n";
                return 2;
            }
            return 0;
        }

        if (*small) {
            if (s_t != 2 && s_t != 3) {
                std::cerr << "smallcase covers t = 2 and t = 3\n";
                return 2;
            }
            VerificationReport rep = smallcase_report(s_t);
            std::cout << rep.to_json() << "\n";
            return rep.pass() ? 0 : 1;
        }

        if (*scan) {
            auto sols = corr2_scan(3, c_tmax, c_nmax, c_dmin);
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& s : sols)
                j.push_back({{"n", s.n}, {"t", s.t}, {"delta", s.delta}});
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const UnsupportedInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GcdViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
