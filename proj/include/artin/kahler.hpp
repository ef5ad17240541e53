#pragma once

#include "artin/algebra.hpp"

namespace artin {

/// Omega_A as an explicit Q-vector space: the free module on dX_1..dX_m
/// (ambient coordinate j*dim + i is the coefficient of b_i dX_j) modulo the
/// span of b * dg for basis monomials b and ideal generators g.
class KahlerModule {
public:
  /// Relations generated from the reduced Groebner basis.
  explicit KahlerModule(AlgebraPtr algebra);
  /// Relations generated from an arbitrary generating set of the same ideal.
  KahlerModule(AlgebraPtr algebra, const std::vector<Polynomial> &ideal_generators);

  const AlgebraPtr &algebra() const { return algebra_; }
  std::size_t ambient_dim() const { return algebra_->nvars() * algebra_->dim(); }
  std::size_t dim() const { return free_columns_.size(); }
  const Subspace &relations() const { return relations_; }

  /// Quotient coordinates of an ambient vector.
  Vec reduce(const Vec &ambient) const;
  /// Canonical ambient representative of quotient coordinates.
  Vec lift(const Vec &coords) const;

  /// Ambient vector of sum_j (dp/dX_j) dX_j.
  Vec ambient_differential(const Polynomial &p) const;

private:
  void build(const std::vector<Polynomial> &gens);

  AlgebraPtr algebra_;
  Subspace relations_;
  std::vector<std::size_t> free_columns_;
};

using KahlerPtr = std::shared_ptr<const KahlerModule>;

KahlerPtr kahler_module(AlgebraPtr algebra);

struct DifferentialForm {
  KahlerPtr module;
  Vec coords;

  bool is_zero() const { return artin::is_zero(coords); }
  DifferentialForm operator+(const DifferentialForm &o) const;
  DifferentialForm operator-(const DifferentialForm &o) const;
  DifferentialForm scaled(const Rational &c) const;
  /// Per-variable coefficients a_j of the canonical representative sum_j a_j dX_j.
  std::vector<Vec> components() const;
  std::string to_string() const;
};

/// The universal derivation d: A -> Omega_A.
DifferentialForm differential(const KahlerPtr &module, const Vec &a);
bool form_is_zero(const DifferentialForm &w);
/// a * w under the A-module structure.
DifferentialForm act(const Vec &a, const DifferentialForm &w);

/// Omega_h: sends a dX_i to h(a) d(h(X_i)). Throws IncompatibleAlgebras if
/// the modules do not sit over the map's source and target.
DifferentialForm pushforward(const AlgebraMap &h, const DifferentialForm &w, const KahlerPtr &target);

/// ker(d: A -> Omega_A).
Subspace h0_dR(const KahlerModule &module);
/// ker(H^0_dR(A) -> A_red) = H^0_dR(A) intersected with the nilradical.
/// Throws NotLocalOverQ.
Subspace embedding_obstruction(const KahlerModule &module);

} // namespace artin
