#pragma once

#include "ahecke/weyl.hpp"

#include <memory>
#include <vector>

namespace ahecke {

// Irreducible characters of a group whose character table is rational.
// Throws IllegalCharacter if some character is not rational-valued.
std::vector<ClassFunction> irreducible_characters(std::shared_ptr<const Subgroup> g);

// All subgroups of g, ordered by order and then by elements.
std::vector<std::shared_ptr<const Subgroup>> all_subgroups(const Subgroup& g);

// Indicator functions of the conjugacy classes.
std::vector<ClassFunction> class_indicators(std::shared_ptr<const Subgroup> g);

}  // namespace ahecke
