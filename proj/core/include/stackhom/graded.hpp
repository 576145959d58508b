#pragma once

#include "stackhom/linalg.hpp"

#include <map>
#include <optional>
#include <string>

namespace stackhom {

/// Per-degree presentation of a graded finitely generated module:
/// free rank plus invariant factors d1 | d2 | ... (each > 1).
/// Degrees outside the known window are implicitly zero unless a window
/// is set, in which case degrees outside it are unknown.
class GradedModulePresentation {
public:
    GradedModulePresentation() = default;

    void set(int degree, HomologySummary h);
    HomologySummary at(int degree) const;
    bool known(int degree) const;

    void set_window(int lo, int hi) { window_ = std::make_pair(lo, hi); }
    std::optional<std::pair<int, int>> window() const { return window_; }

    /// Degrees with a nonzero group, ascending.
    std::vector<int> support() const;
    /// All explicitly stored degrees, ascending (may include zero groups).
    std::vector<int> stored_degrees() const;

    bool equal_on(const GradedModulePresentation& o, int lo, int hi) const;
    bool operator==(const GradedModulePresentation& o) const;

    /// Render one group like "Z^2 (+) Z/2 (+) Z/4" or "0"; field labels use
    /// the coefficient name, e.g. "F2^3".
    static std::string group_string(const HomologySummary& h, const Coefficients& c);

private:
    std::map<int, HomologySummary> groups_;
    std::optional<std::pair<int, int>> window_;
};

} // namespace stackhom
