#pragma once

#include "stackhom/simplicial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stackhom {

/// Malformed input text (CLI exit code 2).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct SpaceGroup {
    enum class Kind { None, Cyclic, Table };
    Kind kind = Kind::None;
    int cyclic_order = 0;
    int table_size = 0;
    std::vector<int> table;
    /// element label ("g" for the cyclic generator, an element index for
    /// table groups) -> vertex images in VERTICES order
    std::vector<std::pair<std::string, std::vector<std::string>>> actions;

    bool operator==(const SpaceGroup&) const = default;
};

/// Line-oriented description of a space: vertices, facets, optional
/// subcomplex at infinity, optional orientation signs, optional group action.
struct SpaceFile {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> facets;
    std::vector<std::vector<std::string>> at_infinity;
    std::vector<std::pair<int, std::vector<std::string>>> orientation;
    SpaceGroup group;

    static SpaceFile parse(const std::string& text);
    std::string serialize() const;

    SimplicialComplex complex() const;
    SimplicialPair pair() const;
    /// Signs aligned with the complex's top-face order; nullopt if the file
    /// carries no orientation section.
    std::optional<Orientation> orientation_signs(const SimplicialComplex& x) const;
    std::optional<GroupAction> action(const SimplicialComplex& x) const;
    bool has_group() const { return group.kind != SpaceGroup::Kind::None; }

    bool operator==(const SpaceFile&) const = default;
};

} // namespace stackhom
