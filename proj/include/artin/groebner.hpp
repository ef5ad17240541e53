#pragma once

#include "artin/polynomial.hpp"

#include <vector>

namespace artin {

/// Reduced Groebner basis: monic generators sorted by ascending leading
/// monomial, no term of any generator divisible by another's leading term.
class GroebnerBasis {
public:
  GroebnerBasis(VarList vars, MonomialOrder order, std::vector<Polynomial> generators);

  const VarList &vars() const { return vars_; }
  const MonomialOrder &order() const { return order_; }
  const std::vector<Polynomial> &generators() const { return generators_; }
  const std::vector<Monomial> &leading_monomials() const { return leading_; }

  bool is_unit_ideal() const;
  bool is_zero_ideal() const { return generators_.empty(); }
  bool is_homogeneous() const;

private:
  VarList vars_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> leading_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the coprime-leading-monomial pair criterion. Deterministic.
GroebnerBasis buchberger(const VarList &vars, const std::vector<Polynomial> &gens, const MonomialOrder &order);

/// Fully reduced remainder of p: supported on standard monomials only.
Polynomial normal_form(const Polynomial &p, const GroebnerBasis &gb);

bool ideal_membership(const Polynomial &p, const GroebnerBasis &gb);

/// Every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis &gb);

/// Monomials not divisible by any leading monomial, ascending in the basis
/// order. Throws NotZeroDimensional when that set is infinite.
std::vector<Monomial> standard_monomials(const GroebnerBasis &gb);

} // namespace artin
