#include "stackhom/report.hpp"

#include <fmt/core.h>

#include <cstdint>

namespace stackhom {

std::string digest64(const std::string& data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return fmt::format("{:016x}", h);
}

std::string degree_label(const TheoryReport& r, int stored_degree) {
    int display = r.cohomological ? -stored_degree : stored_degree;
    if (r.degree_symbol.back() == '^') return fmt::format("{}{}", r.degree_symbol, display);
    return fmt::format("{}_{}", r.degree_symbol, display);
}

namespace {

std::vector<int> report_degrees(const TheoryReport& r) {
    std::vector<int> ds;
    if (auto w = r.groups.window()) {
        for (int d = w->first; d <= w->second; ++d) ds.push_back(d);
    } else {
        std::vector<int> stored = r.groups.stored_degrees();
        if (stored.empty()) return ds;
        for (int d = stored.front(); d <= stored.back(); ++d) ds.push_back(d);
    }
    if (r.cohomological) std::reverse(ds.begin(), ds.end());
    return ds;
}

} // namespace

std::string render_text(const TheoryReport& r) {
    std::string out;
    out += fmt::format("command: {}\n", r.command);
    if (!r.input_digest.empty()) out += fmt::format("input digest: {}\n", r.input_digest);
    out += fmt::format("theory: {}\n", r.theory_label);
    out += fmt::format("coefficients: {}\n", r.coeff.label());
    std::vector<int> ds = report_degrees(r);
    if (ds.empty()) out += "no groups computed\n";
    for (int d : ds)
        out += fmt::format("{} = {}\n", degree_label(r, d),
                           GradedModulePresentation::group_string(r.groups.at(d), r.coeff));
    if (r.stabilization) {
        const auto& s = *r.stabilization;
        out += fmt::format("stabilization: N={} vs N={}: {}\n", s.n_used, s.n_compare,
                           s.stabilized ? "stabilized" : "NOT stabilized");
    }
    for (const auto& v : r.verdicts) {
        out += fmt::format("check: {}: {}", v.label, v.pass ? "PASS" : "FAIL");
        if (!v.detail.empty()) out += fmt::format(" ({})", v.detail);
        out += "\n";
    }
    if (!r.verdicts.empty())
        out += fmt::format("result: {}\n", r.all_pass() ? "PASS" : "FAIL");
    return out;
}

std::string render_records(const TheoryReport& r) {
    std::string out;
    out += fmt::format("record command {}\n", r.command);
    if (!r.input_digest.empty()) out += fmt::format("record digest {}\n", r.input_digest);
    out += fmt::format("record theory {}\n", r.theory_label);
    out += fmt::format("record coeff {}\n", r.coeff.label());
    for (int d : report_degrees(r)) {
        HomologySummary h = r.groups.at(d);
        std::string torsion;
        for (size_t i = 0; i < h.torsion.size(); ++i)
            torsion += h.torsion[i].str() + (i + 1 == h.torsion.size() ? "" : ",");
        int display = r.cohomological ? -d : d;
        out += fmt::format("record group {} free={} torsion={}\n", display, h.free_rank, torsion);
    }
    if (r.stabilization)
        out += fmt::format("record stabilization n={} compare={} stabilized={}\n",
                           r.stabilization->n_used, r.stabilization->n_compare,
                           r.stabilization->stabilized ? 1 : 0);
    for (const auto& v : r.verdicts)
        out += fmt::format("record check {} {}\n", v.pass ? "pass" : "fail", v.label);
    if (!r.verdicts.empty())
        out += fmt::format("record result {}\n", r.all_pass() ? "pass" : "fail");
    return out;
}

} // namespace stackhom
