#pragma once

#include "stralg/quiver.hpp"
#include "stralg/words.hpp"

#include <string>
#include <vector>

namespace stralg {

// Zigzag diagram of a string module: canonical basis vectors as nodes,
// letter actions as labeled edges.
std::string string_module_dot(const BoundQuiverAlgebra& alg, const Word& w);

// Hasse diagram of a finite poset given by its full order relation.
std::string hasse_dot(const std::vector<std::string>& labels,
                      const std::vector<std::vector<bool>>& le);

} // namespace stralg
