#pragma once

#include <string>
#include <vector>

namespace punctorus {

struct CheckRow {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerificationReport {
    std::string subject;
    std::vector<CheckRow> checks;
    std::vector<std::string> artifacts;

    bool pass() const;
    std::string to_json() const;  // deterministic bytes; timing never included
};

// The per-t verification battery over the assembled surface and its words.
VerificationReport verify_t(int t);

// Inclusive-exclusive range, fanned out over `jobs` workers, reported in
// ascending t order.
std::vector<VerificationReport> verify_range(int t_lo, int t_hi, int jobs);

VerificationReport smallcase_report(int t);

}  // namespace punctorus
