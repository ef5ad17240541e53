#include "artin/kahler.hpp"

#include "artin/error.hpp"

namespace artin {

KahlerModule::KahlerModule(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  build(algebra_->groebner().generators());
}

KahlerModule::KahlerModule(AlgebraPtr algebra, const std::vector<Polynomial> &ideal_generators)
    : algebra_(std::move(algebra)) {
  build(ideal_generators);
}

void KahlerModule::build(const std::vector<Polynomial> &gens) {
  const auto &a = *algebra_;
  std::size_t n = a.dim(), m = a.nvars();
  std::vector<Vec> rels;
  for (const auto &g : gens) {
    Vec dg = ambient_differential(g);
    for (std::size_t b = 0; b < n; ++b) {
      Vec bv = unit_vec(n, b);
      Vec rel(m * n);
      for (std::size_t j = 0; j < m; ++j) {
        Vec block(dg.begin() + static_cast<std::ptrdiff_t>(j * n), dg.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
        Vec prod = a.multiply(bv, block);
        std::copy(prod.begin(), prod.end(), rel.begin() + static_cast<std::ptrdiff_t>(j * n));
      }
      rels.push_back(std::move(rel));
    }
  }
  relations_ = Subspace::span(m * n, rels);
  std::vector<bool> pivot(m * n, false);
  for (auto p : relations_.pivots())
    pivot[p] = true;
  free_columns_.clear();
  for (std::size_t c = 0; c < m * n; ++c)
    if (!pivot[c])
      free_columns_.push_back(c);
}

Vec KahlerModule::ambient_differential(const Polynomial &p) const {
  const auto &a = *algebra_;
  std::size_t n = a.dim();
  Vec out(a.nvars() * n);
  for (std::size_t j = 0; j < a.nvars(); ++j) {
    Vec c = a.from_polynomial(partial_derivative(p, j));
    std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(j * n));
  }
  return out;
}

Vec KahlerModule::reduce(const Vec &ambient) const {
  Vec r = relations_.reduce(ambient);
  Vec coords(free_columns_.size());
  for (std::size_t i = 0; i < free_columns_.size(); ++i)
    coords[i] = r[free_columns_[i]];
  return coords;
}

Vec KahlerModule::lift(const Vec &coords) const {
  if (coords.size() != free_columns_.size())
    throw Error(ErrorCode::IncompatibleAlgebras, "form coordinates do not match the module");
  Vec amb(ambient_dim());
  for (std::size_t i = 0; i < free_columns_.size(); ++i)
    amb[free_columns_[i]] = coords[i];
  return amb;
}

KahlerPtr kahler_module(AlgebraPtr algebra) { return std::make_shared<const KahlerModule>(std::move(algebra)); }

namespace {

void check_same(const DifferentialForm &a, const DifferentialForm &b) {
  if (a.module.get() != b.module.get())
    throw Error(ErrorCode::IncompatibleAlgebras, "forms live in different modules");
}

} // namespace

DifferentialForm DifferentialForm::operator+(const DifferentialForm &o) const {
  check_same(*this, o);
  Vec c = coords;
  axpy(c, 1, o.coords);
  return {module, std::move(c)};
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm &o) const {
  check_same(*this, o);
  Vec c = coords;
  axpy(c, -1, o.coords);
  return {module, std::move(c)};
}

DifferentialForm DifferentialForm::scaled(const Rational &s) const {
  Vec c = coords;
  for (auto &x : c)
    x *= s;
  return {module, std::move(c)};
}

std::vector<Vec> DifferentialForm::components() const {
  Vec amb = module->lift(coords);
  std::size_t n = module->algebra()->dim();
  std::vector<Vec> out;
  for (std::size_t j = 0; j < module->algebra()->nvars(); ++j)
    out.emplace_back(amb.begin() + static_cast<std::ptrdiff_t>(j * n),
                     amb.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
  return out;
}

std::string DifferentialForm::to_string() const {
  const auto &a = *module->algebra();
  auto comps = components();
  std::string out;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (artin::is_zero(comps[j]))
      continue;
    if (!out.empty())
      out += " + ";
    out += "(" + a.format(comps[j]) + ")*d" + a.vars()[j];
  }
  return out.empty() ? "0" : out;
}

DifferentialForm differential(const KahlerPtr &module, const Vec &a) {
  Polynomial p = module->algebra()->to_polynomial(a);
  return {module, module->reduce(module->ambient_differential(p))};
}

bool form_is_zero(const DifferentialForm &w) { return w.is_zero(); }

DifferentialForm act(const Vec &a, const DifferentialForm &w) {
  const auto &alg = *w.module->algebra();
  std::size_t n = alg.dim();
  Vec amb = w.module->lift(w.coords);
  Vec out(amb.size());
  for (std::size_t j = 0; j < alg.nvars(); ++j) {
    Vec block(amb.begin() + static_cast<std::ptrdiff_t>(j * n), amb.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
    Vec prod = alg.multiply(a, block);
    std::copy(prod.begin(), prod.end(), out.begin() + static_cast<std::ptrdiff_t>(j * n));
  }
  return {w.module, w.module->reduce(out)};
}

DifferentialForm pushforward(const AlgebraMap &h, const DifferentialForm &w, const KahlerPtr &target) {
  if (w.module->algebra().get() != h.source().get() || target->algebra().get() != h.target().get())
    throw Error(ErrorCode::IncompatibleAlgebras, "pushforward modules do not match the map");
  auto comps = w.components();
  Vec amb(target->ambient_dim());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (is_zero(comps[j]))
      continue;
    Vec coeff = h.apply(comps[j]);
    DifferentialForm dimg = differential(target, h.variable_images()[j]);
    DifferentialForm term = act(coeff, dimg);
    axpy(amb, 1, target->lift(term.coords));
  }
  return {target, target->reduce(amb)};
}

Subspace h0_dR(const KahlerModule &module) {
  const auto &a = *module.algebra();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < a.dim(); ++i)
    cols.push_back(module.reduce(module.ambient_differential(Polynomial::term(a.vars(), a.basis()[i], 1))));
  return Subspace::span(a.dim(), nullspace(Matrix::from_columns(module.dim(), cols)));
}

Subspace embedding_obstruction(const KahlerModule &module) {
  Subspace m = maximal_ideal(*module.algebra());
  return h0_dR(module).intersect(m);
}

} // namespace artin
