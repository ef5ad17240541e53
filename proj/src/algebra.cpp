#include "artin/algebra.hpp"

#include "artin/error.hpp"

#include <algorithm>

namespace artin {

AlgebraPtr build_algebra(const VarList &vars, const std::vector<Polynomial> &gens, std::optional<MonomialOrder> order) {
  MonomialOrder ord = order ? *order : MonomialOrder::grevlex(vars.size());
  GroebnerBasis gb = buchberger(vars, gens, ord);
  if (gb.is_unit_ideal())
    throw Error(ErrorCode::TrivialAlgebra, "the ideal contains 1; the quotient is the zero ring");
  std::shared_ptr<ArtinAlgebra> alg(new ArtinAlgebra(gens, std::move(gb)));
  alg->basis_ = standard_monomials(alg->gb_);
  for (std::size_t i = 0; i < alg->basis_.size(); ++i)
    alg->index_.emplace(alg->basis_[i], i);

  std::size_t n = alg->dim();
  alg->table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Monomial prod = alg->basis_[i] * alg->basis_[j];
      Vec coords = alg->from_polynomial(Polynomial::term(vars, prod, 1));
      alg->table_[i * n + j] = coords;
      alg->table_[j * n + i] = std::move(coords);
    }
  return alg;
}

std::optional<std::size_t> ArtinAlgebra::basis_index(const Monomial &m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Vec ArtinAlgebra::one() const { return unit_vec(dim(), 0); }

Vec ArtinAlgebra::variable(std::size_t index) const {
  return from_polynomial(Polynomial::variable(vars(), index));
}

Vec ArtinAlgebra::from_polynomial(const Polynomial &p) const {
  Polynomial r = normal_form(p, gb_);
  Vec v(dim());
  for (const auto &[m, c] : r.terms())
    v[index_.at(m)] = c;
  return v;
}

Polynomial ArtinAlgebra::to_polynomial(const Vec &a) const {
  if (a.size() != dim())
    throw Error(ErrorCode::IncompatibleAlgebras, "element has the wrong number of coordinates");
  Polynomial p(vars());
  for (std::size_t i = 0; i < dim(); ++i)
    p.add_term(basis_[i], a[i]);
  return p;
}

Vec ArtinAlgebra::multiply(const Vec &a, const Vec &b) const {
  if (a.size() != dim() || b.size() != dim())
    throw Error(ErrorCode::IncompatibleAlgebras, "element has the wrong number of coordinates");
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(b[j]) == 0)
        continue;
      axpy(out, a[i] * b[j], table_[i * dim() + j]);
    }
  }
  return out;
}

Vec ArtinAlgebra::power(const Vec &a, unsigned k) const {
  Vec r = one();
  for (unsigned i = 0; i < k; ++i)
    r = multiply(r, a);
  return r;
}

Matrix ArtinAlgebra::multiplication_matrix(const Vec &a) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim(); ++j)
    cols.push_back(multiply(a, unit_vec(dim(), j)));
  return Matrix::from_columns(dim(), cols);
}

// --- maps -------------------------------------------------------------------

Vec evaluate(const Polynomial &p, const ArtinAlgebra &target, const std::vector<Vec> &images) {
  if (images.size() != p.nvars())
    throw Error(ErrorCode::IncompatibleAlgebras, "one image per variable is required");
  std::map<std::pair<std::size_t, std::uint32_t>, Vec> powers;
  auto pow = [&](std::size_t v, std::uint32_t e) -> const Vec & {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end())
      return it->second;
    return powers.emplace(key, target.power(images[v], e)).first->second;
  };
  Vec out(target.dim());
  for (const auto &[m, c] : p.terms()) {
    Vec t = target.one();
    for (std::size_t v = 0; v < m.nvars(); ++v)
      if (m[v] > 0)
        t = target.multiply(t, pow(v, m[v]));
    axpy(out, c, t);
  }
  return out;
}

AlgebraMap AlgebraMap::from_variable_images(AlgebraPtr source, AlgebraPtr target, std::vector<Vec> images) {
  if (images.size() != source->nvars())
    throw Error(ErrorCode::IncompatibleAlgebras, "one image per source variable is required");
  for (const auto &im : images)
    if (im.size() != target->dim())
      throw Error(ErrorCode::IncompatibleAlgebras, "image does not live in the target algebra");
  for (const auto &g : source->presentation()) {
    Vec r = evaluate(g, *target, images);
    if (!is_zero(r))
      throw Error(ErrorCode::RelationViolated,
                  "relation " + g.to_string() + " maps to " + target->format(r) + " instead of 0");
  }
  std::vector<Vec> cols;
  for (const auto &m : source->basis())
    cols.push_back(evaluate(Polynomial::term(source->vars(), m, 1), *target, images));
  Matrix mat = Matrix::from_columns(target->dim(), cols);
  return AlgebraMap(std::move(source), std::move(target), std::move(images), std::move(mat));
}

AlgebraMap AlgebraMap::identity(AlgebraPtr algebra) {
  std::vector<Vec> images;
  for (std::size_t i = 0; i < algebra->nvars(); ++i)
    images.push_back(algebra->variable(i));
  return from_variable_images(algebra, algebra, std::move(images));
}

AlgebraMap AlgebraMap::then(const AlgebraMap &next) const {
  if (target_.get() != next.source_.get())
    throw Error(ErrorCode::IncompatibleAlgebras, "maps are not composable");
  std::vector<Vec> images;
  for (const auto &im : images_)
    images.push_back(next.apply(im));
  return AlgebraMap(source_, next.target_, std::move(images), next.matrix_ * matrix_);
}

// --- structure --------------------------------------------------------------

Quotient quotient_algebra(const AlgebraPtr &a, const std::vector<Vec> &extra) {
  std::vector<Polynomial> gens = a->groebner().generators();
  for (const auto &e : extra)
    gens.push_back(a->to_polynomial(e));
  AlgebraPtr q = build_algebra(a->vars(), gens, a->groebner().order());
  std::vector<Vec> images;
  for (std::size_t i = 0; i < a->nvars(); ++i)
    images.push_back(q->variable(i));
  return {q, AlgebraMap::from_variable_images(a, q, std::move(images))};
}

Subspace nilradical(const ArtinAlgebra &a) {
  std::size_t n = a.dim();
  Vec traces(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      traces[k] += a.basis_product(k, l)[l];
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec &p = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(p[k]) != 0)
          gram.at(i, j) += p[k] * traces[k];
    }
  return Subspace::span(n, nullspace(gram));
}

Quotient reduced_quotient(const AlgebraPtr &a) { return quotient_algebra(a, nilradical(*a).basis()); }

bool is_local_over_q(const ArtinAlgebra &a) { return nilradical(a).dim() + 1 == a.dim(); }

Subspace maximal_ideal(const ArtinAlgebra &a) {
  Subspace m = nilradical(a);
  if (m.dim() + 1 != a.dim())
    throw Error(ErrorCode::NotLocalOverQ, "the algebra is not local with residue field Q (nilradical has codimension " +
                                              std::to_string(a.dim() - m.dim()) + ")");
  return m;
}

Rational residue(const ArtinAlgebra &alg, const Vec &a) {
  Subspace m = maximal_ideal(alg);
  Vec r1 = m.reduce(alg.one());
  Vec ra = m.reduce(a);
  for (std::size_t i = 0; i < r1.size(); ++i)
    if (sgn(r1[i]) != 0)
      return ra[i] / r1[i];
  throw Error(ErrorCode::NotLocalOverQ, "unit lies in the maximal ideal");
}

Subspace product(const ArtinAlgebra &a, const Subspace &u, const Subspace &w) {
  std::vector<Vec> prods;
  for (const auto &x : u.basis())
    for (const auto &y : w.basis())
      prods.push_back(a.multiply(x, y));
  return Subspace::span(a.dim(), prods);
}

Subspace socle(const ArtinAlgebra &a) {
  Subspace m = maximal_ideal(a);
  Matrix stacked(0, a.dim());
  for (const auto &x : m.basis()) {
    Matrix lx = a.multiplication_matrix(x);
    for (std::size_t r = 0; r < lx.rows(); ++r)
      stacked.append_row(lx.row(r));
  }
  return Subspace::span(a.dim(), nullspace(stacked));
}

bool is_gorenstein(const ArtinAlgebra &a) { return socle(a).dim() == 1; }

std::size_t embedding_dimension(const ArtinAlgebra &a) {
  Subspace m = maximal_ideal(a);
  return m.dim() - product(a, m, m).dim();
}

bool is_principal_ideal_algebra(const ArtinAlgebra &a) { return embedding_dimension(a) <= 1; }

std::vector<std::size_t> degree_component(const ArtinAlgebra &a, std::uint32_t degree) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.basis()[i].degree() == degree)
      idx.push_back(i);
  return idx;
}

GradingInfo grading_info(const ArtinAlgebra &a) {
  GradingInfo info;
  Subspace m = nilradical(a);
  Subspace power = m;
  while (!power.is_zero()) {
    ++info.nilpotency_index;
    power = product(a, power, m);
  }
  info.is_standard_graded = a.groebner().is_homogeneous();
  if (info.is_standard_graded) {
    std::uint32_t top = 0;
    for (const auto &b : a.basis())
      top = std::max(top, b.degree());
    for (std::uint32_t d = 0; d <= top; ++d) {
      std::vector<Vec> span;
      for (auto i : degree_component(a, d))
        span.push_back(unit_vec(a.dim(), i));
      info.components.push_back(Subspace::span(a.dim(), span));
    }
  }
  return info;
}

Vec euler_derivation(const ArtinAlgebra &alg, const Vec &a) {
  if (!alg.groebner().is_homogeneous())
    throw Error(ErrorCode::NotGraded, "the algebra is not standard graded");
  Vec out(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i)
    out[i] = a[i] * alg.basis()[i].degree();
  return out;
}

} // namespace artin
