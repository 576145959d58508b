#pragma once

#include "stackhom/spacefile.hpp"

namespace stackhom {

struct Builtin {
    std::string name;
    std::string description;
    SpaceFile file;
};

/// The shipped space library, in stable order.
const std::vector<Builtin>& builtins();
const Builtin& find_builtin(const std::string& name);

} // namespace stackhom
