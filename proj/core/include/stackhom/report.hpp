#pragma once

#include "stackhom/graded.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stackhom {

struct StabilizationMeta {
    int n_used = 0;    // resolution length of the accepted answer
    int n_compare = 0; // the longer resolution it was checked against
    int cap = 0;
    bool stabilized = false;
};

struct Verdict {
    std::string label;
    bool pass = false;
    std::string detail;
};

/// Deterministic record of a computation or theorem verification.
struct TheoryReport {
    std::string command;
    std::string theory_label;
    std::string degree_symbol = "H"; // e.g. "H", "H^BM"
    bool cohomological = false;      // display degree i for stored degree -i
    std::string input_digest;
    Coefficients coeff = Coefficients::integers();
    GradedModulePresentation groups;
    std::vector<Verdict> verdicts;
    std::optional<StabilizationMeta> stabilization;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
};

/// FNV-1a content hash, 16 hex digits.
std::string digest64(const std::string& data);

/// "H_0", "H^2", "H^BM_-1", ... per the report's degree symbol.
std::string degree_label(const TheoryReport& r, int stored_degree);

std::string render_text(const TheoryReport& r);
std::string render_records(const TheoryReport& r);

} // namespace stackhom
