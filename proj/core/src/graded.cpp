#include "stackhom/graded.hpp"

#include <fmt/core.h>

namespace stackhom {

void GradedModulePresentation::set(int degree, HomologySummary h) {
    for (size_t i = 0; i + 1 < h.torsion.size(); ++i)
        if (h.torsion[i + 1] % h.torsion[i] != 0)
            throw Error("torsion list violates the divisibility chain");
    groups_[degree] = std::move(h);
}

HomologySummary GradedModulePresentation::at(int degree) const {
    auto it = groups_.find(degree);
    if (it != groups_.end()) return it->second;
    if (!known(degree)) throw Error(fmt::format("degree {} outside computed window", degree));
    return {};
}

bool GradedModulePresentation::known(int degree) const {
    if (groups_.count(degree)) return true;
    if (!window_) return true; // no window: unstored degrees are zero
    return degree >= window_->first && degree <= window_->second;
}

std::vector<int> GradedModulePresentation::support() const {
    std::vector<int> s;
    for (const auto& [d, h] : groups_)
        if (!h.is_zero()) s.push_back(d);
    return s;
}

std::vector<int> GradedModulePresentation::stored_degrees() const {
    std::vector<int> s;
    for (const auto& [d, h] : groups_) s.push_back(d);
    return s;
}

bool GradedModulePresentation::equal_on(const GradedModulePresentation& o, int lo, int hi) const {
    for (int d = lo; d <= hi; ++d) {
        if (!known(d) || !o.known(d)) return false;
        if (!(at(d) == o.at(d))) return false;
    }
    return true;
}

bool GradedModulePresentation::operator==(const GradedModulePresentation& o) const {
    if (window_.has_value() != o.window_.has_value()) return false;
    if (window_ && *window_ != *o.window_) return false;
    std::vector<int> all = stored_degrees();
    for (int d : o.stored_degrees()) all.push_back(d);
    for (int d : all) {
        if (known(d) != o.known(d)) return false;
        if (known(d) && !(at(d) == o.at(d))) return false;
    }
    return true;
}

std::string GradedModulePresentation::group_string(const HomologySummary& h,
                                                   const Coefficients& c) {
    if (h.is_zero()) return "0";
    std::string base = c.label();
    std::string s;
    if (h.free_rank == 1)
        s = base;
    else if (h.free_rank > 1)
        s = fmt::format("{}^{}", base, h.free_rank);
    for (const Int& t : h.torsion) {
        if (!s.empty()) s += " (+) ";
        s += fmt::format("Z/{}", t.str());
    }
    return s;
}

} // namespace stackhom
