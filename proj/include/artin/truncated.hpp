#pragma once

#include "artin/kahler.hpp"

#include <compare>
#include <cstdint>
#include <optional>

namespace artin {

/// Element of Q[t]/(t^{N+1}) as its N+1 coefficients.
struct TruncPoly {
  Vec coeffs;

  explicit TruncPoly(unsigned n = 0) : coeffs(n + 1) {}
  unsigned truncation() const { return static_cast<unsigned>(coeffs.size() - 1); }
  bool is_zero() const { return artin::is_zero(coeffs); }
  /// Index of the first nonzero coefficient; nullopt for zero.
  std::optional<unsigned> order() const;

  static TruncPoly monomial(unsigned n, unsigned e, const Rational &c);
  static TruncPoly constant(unsigned n, const Rational &c);

  TruncPoly operator+(const TruncPoly &o) const;
  TruncPoly operator*(const TruncPoly &o) const;
  TruncPoly derivative() const;

  bool operator==(const TruncPoly &o) const { return coeffs == o.coeffs; }
  std::string to_string() const;
};

TruncPoly parse_trunc_poly(std::string_view text, unsigned n);

/// Value of a truncated valuation: 0..N or infinity. Addition saturates at
/// infinity, which is the maximum of the order.
class TruncValue {
public:
  static TruncValue finite(unsigned v) { return TruncValue(v, false); }
  static TruncValue infinity() { return TruncValue(0, true); }

  bool is_infinite() const { return inf_; }
  unsigned value() const { return v_; }

  TruncValue operator+(const TruncValue &o) const {
    return inf_ || o.inf_ ? infinity() : finite(v_ + o.v_);
  }
  std::strong_ordering operator<=>(const TruncValue &o) const {
    if (inf_ || o.inf_)
      return inf_ <=> o.inf_;
    return v_ <=> o.v_;
  }
  bool operator==(const TruncValue &o) const { return (*this <=> o) == 0; }
  std::string to_string() const { return inf_ ? "inf" : std::to_string(v_); }

private:
  TruncValue(unsigned v, bool inf) : v_(v), inf_(inf) {}
  unsigned v_;
  bool inf_;
};

/// Verified homomorphism A -> Q[t]/(t^{N+1}) given by variable images.
class TruncatedHom {
public:
  /// Throws RelationViolated naming the first presentation generator that
  /// does not vanish, with its residual.
  static TruncatedHom make(AlgebraPtr source, unsigned n, std::vector<TruncPoly> images);

  const AlgebraPtr &source() const { return source_; }
  unsigned truncation() const { return n_; }
  const std::vector<TruncPoly> &images() const { return images_; }
  /// (N+1) x dim: column i is the image of basis monomial i.
  const Matrix &matrix() const { return matrix_; }

  TruncPoly apply(const Vec &a) const;
  /// The same map as an AlgebraMap into `target`, which must be
  /// truncated_algebra(truncation()).
  AlgebraMap as_algebra_map(const AlgebraPtr &target) const;

  /// Order by N, then images lexicographically.
  bool operator<(const TruncatedHom &o) const;
  bool operator==(const TruncatedHom &o) const;
  std::string to_string() const;

private:
  TruncatedHom(AlgebraPtr s, unsigned n, std::vector<TruncPoly> im, Matrix m)
      : source_(std::move(s)), n_(n), images_(std::move(im)), matrix_(std::move(m)) {}

  AlgebraPtr source_;
  unsigned n_;
  std::vector<TruncPoly> images_;
  Matrix matrix_;
};

/// Q[t]/(t^{N+1}) as an ArtinAlgebra in the variable t; basis 1, t, ..., t^N.
AlgebraPtr truncated_algebra(unsigned n);

TruncValue valuation(const TruncatedHom &h, const Vec &a);

/// Row-reduce the images of linearly independent a_1..a_n so the results
/// have strictly increasing finite valuations followed by infinite ones,
/// spanning the same subspace. Throws DependentInput.
std::vector<Vec> triangularize(const TruncatedHom &h, const std::vector<Vec> &elements);

/// Image of w in Omega_B = (Q[t]/(t^{N+1})) dt modulo t^N dt, as the
/// coefficients of P(t) in P(t) dt (entry N is always zero). Computed by
/// direct substitution.
TruncPoly pushforward_form(const TruncatedHom &h, const DifferentialForm &w);
bool pushforward_kills(const TruncatedHom &h, const DifferentialForm &w);

enum class SearchStrategy { Monomial, DenseRandom, User };

std::optional<SearchStrategy> parse_strategy(std::string_view name);
const char *to_string(SearchStrategy s);

std::vector<Rational> default_coefficient_pool();

struct SearchOptions {
  unsigned n_max = 12;
  /// Homs returned per strategy, at most.
  std::size_t budget = 500;
  std::uint64_t seed = 1;
  std::vector<SearchStrategy> strategies{SearchStrategy::Monomial, SearchStrategy::DenseRandom};
  std::vector<Rational> pool = default_coefficient_pool();
  /// For the user strategy: images into Q[t]/(t^{n_max+1}).
  std::vector<TruncPoly> user_images;
  /// Monomial-strategy candidates examined per target truncation before
  /// switching to seeded sampling.
  std::size_t candidate_cap = 40000;
};

/// Verified homs A -> Q[t]/(t^{N+1}), N <= n_max, deduplicated and sorted.
/// Requires A local over Q (throws NotLocalOverQ); each variable is sent to
/// its residue plus an element of (t).
std::vector<TruncatedHom> search_homs(const AlgebraPtr &a, const SearchOptions &options);

} // namespace artin
