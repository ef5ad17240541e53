#pragma once

#include "artin/algebra.hpp"

#include <initializer_list>
#include <string>

inline artin::AlgebraPtr make_algebra(const artin::VarList &vars, std::initializer_list<const char *> gens) {
  std::vector<artin::Polynomial> ps;
  for (auto g : gens)
    ps.push_back(artin::parse_polynomial(g, vars));
  return artin::build_algebra(vars, ps);
}

inline artin::Vec elem(const artin::AlgebraPtr &a, const std::string &text) {
  return a->from_polynomial(artin::parse_polynomial(text, a->vars()));
}

inline const artin::VarList kXY{"X", "Y"};
inline const artin::VarList kX{"X"};

inline artin::AlgebraPtr example_algebra() {
  return make_algebra(kXY, {"X^3*Y", "X^5", "X*Y^3 + 2*X^3", "3*X^2*Y^2 + 5*Y^4"});
}
