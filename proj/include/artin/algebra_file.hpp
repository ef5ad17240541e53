#pragma once

#include "artin/polynomial.hpp"

#include <string>
#include <vector>

namespace artin {

/// Text definition of an algebra:
///
///     # comment
///     vars: X Y
///     gens: X^3*Y; X^5; X*Y^3 + 2*X^3
///           3*X^2*Y^2 + 5*Y^4
///
/// Generators are `;`-separated and may continue over further `gens:` lines
/// or unlabeled lines after the first one. An empty `vars:` line gives Q.
struct AlgebraFile {
  VarList vars;
  std::vector<Polynomial> gens;
};

AlgebraFile parse_algebra_file(std::string_view text);

} // namespace artin
