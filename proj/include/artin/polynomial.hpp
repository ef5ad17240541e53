#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

using Rational = mpq_class;

std::string to_string(const Rational &q);
Rational parse_rational(std::string_view text);

using VarList = std::vector<std::string>;

/// Exponent vector over an ambient variable list.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t &operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t> &exponents() const { return exps_; }

  std::uint32_t degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial &other) const;

  Monomial operator*(const Monomial &other) const;
  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial &other) const;
  friend Monomial lcm(const Monomial &a, const Monomial &b);

  auto operator<=>(const Monomial &) const = default;
  bool operator==(const Monomial &) const = default;

private:
  std::vector<std::uint32_t> exps_;
};

enum class OrderKind { GradedReverseLex, Lex };

/// A term order. `precedence` lists variable indices from the highest ranked
/// to the lowest; the defaults rank later variables higher, so over (X, Y)
/// the grevlex default has Y > X.
class MonomialOrder {
public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t> &precedence() const { return precedence_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial &a, const Monomial &b) const;
  bool less(const Monomial &a, const Monomial &b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder &) const = default;

private:
  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

/// Sparse polynomial over Q. Only nonzero coefficients are stored, so two
/// polynomials over the same variables are equal iff their term maps are.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(VarList vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarList vars, const Rational &c);
  static Polynomial variable(VarList vars, std::size_t index);
  static Polynomial term(VarList vars, Monomial m, const Rational &c);

  const VarList &vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial &m) const;

  void add_term(const Monomial &m, const Rational &c);

  Monomial leading_monomial(const MonomialOrder &order) const;
  Rational leading_coefficient(const MonomialOrder &order) const;

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial operator-() const;
  Polynomial scaled(const Rational &c) const;
  Polynomial times_monomial(const Monomial &m, const Rational &c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

  bool operator==(const Polynomial &other) const;

  /// Canonical text, terms in descending default grevlex order. Parses back
  /// to an equal polynomial.
  std::string to_string() const;

private:
  void check_compatible(const Polynomial &other) const;

  VarList vars_;
  TermMap terms_;
};

Polynomial parse_polynomial(std::string_view text, const VarList &vars);
Polynomial partial_derivative(const Polynomial &p, std::size_t var);
Polynomial power(const Polynomial &p, unsigned k);

std::string monomial_to_string(const Monomial &m, const VarList &vars);

} // namespace artin
