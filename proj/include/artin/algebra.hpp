#pragma once

#include "artin/groebner.hpp"
#include "artin/linalg.hpp"

#include <memory>
#include <optional>

namespace artin {

/// A zero-dimensional quotient Q[X_1..X_m]/I realized on its standard
/// monomial basis. Elements are coordinate vectors over that basis.
/// Immutable after construction.
class ArtinAlgebra {
public:
  const VarList &vars() const { return gb_.vars(); }
  std::size_t nvars() const { return gb_.vars().size(); }
  const std::vector<Polynomial> &presentation() const { return gens_; }
  const GroebnerBasis &groebner() const { return gb_; }
  const std::vector<Monomial> &basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::optional<std::size_t> basis_index(const Monomial &m) const;

  const Vec &basis_product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec one() const;
  Vec variable(std::size_t index) const;
  Vec from_polynomial(const Polynomial &p) const;
  Polynomial to_polynomial(const Vec &a) const;
  std::string format(const Vec &a) const { return to_polynomial(a).to_string(); }

  Vec multiply(const Vec &a, const Vec &b) const;
  Vec power(const Vec &a, unsigned k) const;
  /// Matrix of b -> a*b.
  Matrix multiplication_matrix(const Vec &a) const;

private:
  friend std::shared_ptr<const ArtinAlgebra> build_algebra(const VarList &, const std::vector<Polynomial> &,
                                                           std::optional<MonomialOrder>);
  ArtinAlgebra(std::vector<Polynomial> gens, GroebnerBasis gb) : gens_(std::move(gens)), gb_(std::move(gb)) {}

  std::vector<Polynomial> gens_;
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<Vec> table_;
};

using AlgebraPtr = std::shared_ptr<const ArtinAlgebra>;

/// Throws NotZeroDimensional, or TrivialAlgebra when 1 lies in the ideal.
/// The default order is grevlex with later variables ranked higher.
AlgebraPtr build_algebra(const VarList &vars, const std::vector<Polynomial> &gens,
                         std::optional<MonomialOrder> order = std::nullopt);

/// Ring homomorphism between two ArtinAlgebras, determined by the images
/// of the source variables and checked against the source relations.
class AlgebraMap {
public:
  /// Throws RelationViolated if some presentation generator of the source
  /// does not vanish at the images.
  static AlgebraMap from_variable_images(AlgebraPtr source, AlgebraPtr target, std::vector<Vec> images);
  static AlgebraMap identity(AlgebraPtr algebra);

  const AlgebraPtr &source() const { return source_; }
  const AlgebraPtr &target() const { return target_; }
  const std::vector<Vec> &variable_images() const { return images_; }
  /// target.dim x source.dim.
  const Matrix &matrix() const { return matrix_; }

  Vec apply(const Vec &a) const { return matrix_.apply(a); }
  /// `next` after `*this`.
  AlgebraMap then(const AlgebraMap &next) const;

private:
  AlgebraMap(AlgebraPtr s, AlgebraPtr t, std::vector<Vec> images, Matrix m)
      : source_(std::move(s)), target_(std::move(t)), images_(std::move(images)), matrix_(std::move(m)) {}

  AlgebraPtr source_, target_;
  std::vector<Vec> images_;
  Matrix matrix_;
};

/// Evaluate p at the given elements of `target`.
Vec evaluate(const Polynomial &p, const ArtinAlgebra &target, const std::vector<Vec> &images);

struct Quotient {
  AlgebraPtr algebra;
  AlgebraMap projection;
};

/// A / (extra), recomputed from the enlarged presentation.
Quotient quotient_algebra(const AlgebraPtr &a, const std::vector<Vec> &extra);

/// Radical of the trace form (a, b) -> tr(L_ab); equals the nilradical in
/// characteristic zero.
Subspace nilradical(const ArtinAlgebra &a);
Quotient reduced_quotient(const AlgebraPtr &a);

bool is_local_over_q(const ArtinAlgebra &a);
/// Throws NotLocalOverQ unless the nilradical has codimension one.
Subspace maximal_ideal(const ArtinAlgebra &a);
/// The scalar c with a - c*1 in the maximal ideal.
Rational residue(const ArtinAlgebra &alg, const Vec &a);

/// span{u*w : u in U, w in W}.
Subspace product(const ArtinAlgebra &a, const Subspace &u, const Subspace &w);

Subspace socle(const ArtinAlgebra &a);
bool is_gorenstein(const ArtinAlgebra &a);
std::size_t embedding_dimension(const ArtinAlgebra &a);
bool is_principal_ideal_algebra(const ArtinAlgebra &a);

struct GradingInfo {
  bool is_standard_graded = false;
  /// A_0, A_1, ..., A_n; empty unless standard graded.
  std::vector<Subspace> components;
  /// Least n with M^{n+1} = 0, M the nilradical.
  std::size_t nilpotency_index = 0;
};

GradingInfo grading_info(const ArtinAlgebra &a);

/// Basis indices of the standard monomials of the given degree.
std::vector<std::size_t> degree_component(const ArtinAlgebra &a, std::uint32_t degree);

/// D(a) = sum_i i * a_i over homogeneous components. Throws NotGraded.
Vec euler_derivation(const ArtinAlgebra &alg, const Vec &a);

} // namespace artin
