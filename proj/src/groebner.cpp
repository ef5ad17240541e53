#include "artin/groebner.hpp"

#include "artin/error.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace artin {

namespace {

struct Descending {
  const MonomialOrder *order;
  bool operator()(const Monomial &a, const Monomial &b) const { return order->compare(a, b) > 0; }
};

/// Terms kept sorted by the working order so the leading term is begin().
using SortedTerms = std::map<Monomial, Rational, Descending>;

SortedTerms sorted_terms(const Polynomial &p, const MonomialOrder &order) {
  SortedTerms t(Descending{&order});
  for (const auto &[m, c] : p.terms())
    t.emplace(m, c);
  return t;
}

void subtract_multiple(SortedTerms &target, const Rational &c, const Monomial &shift, const Polynomial &g) {
  for (const auto &[m, gc] : g.terms()) {
    Monomial mm = m * shift;
    auto [it, inserted] = target.try_emplace(mm, -c * gc);
    if (!inserted) {
      it->second -= c * gc;
      if (sgn(it->second) == 0)
        target.erase(it);
    }
  }
}

/// Full reduction of p by the list; `skip` excludes one element (used for
/// interreduction).
Polynomial reduce(const Polynomial &p, const std::vector<Polynomial> &basis, const std::vector<Monomial> &leads,
                  const MonomialOrder &order, std::optional<std::size_t> skip = std::nullopt) {
  SortedTerms work = sorted_terms(p, order);
  Polynomial remainder(p.vars());
  while (!work.empty()) {
    auto lead = work.begin();
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (skip && *skip == i)
        continue;
      if (!leads[i].divides(lead->first))
        continue;
      Rational c = lead->second / basis[i].coefficient(leads[i]);
      Monomial shift = lead->first / leads[i];
      subtract_multiple(work, c, shift, basis[i]);
      divided = true;
      break;
    }
    if (!divided) {
      remainder.add_term(lead->first, lead->second);
      work.erase(lead);
    }
  }
  return remainder;
}

Polynomial monic(const Polynomial &p, const MonomialOrder &order) {
  return p.scaled(1 / p.leading_coefficient(order));
}

Polynomial s_polynomial(const Polynomial &f, const Monomial &lf, const Polynomial &g, const Monomial &lg) {
  Monomial l = lcm(lf, lg);
  Polynomial a = f.times_monomial(l / lf, 1 / f.coefficient(lf));
  Polynomial b = g.times_monomial(l / lg, 1 / g.coefficient(lg));
  return a - b;
}

} // namespace

GroebnerBasis::GroebnerBasis(VarList vars, MonomialOrder order, std::vector<Polynomial> generators)
    : vars_(std::move(vars)), order_(std::move(order)), generators_(std::move(generators)) {
  for (const auto &g : generators_)
    leading_.push_back(g.leading_monomial(order_));
}

bool GroebnerBasis::is_unit_ideal() const { return leading_.size() == 1 && leading_.front().is_one(); }

bool GroebnerBasis::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial &g) { return g.is_homogeneous(); });
}

GroebnerBasis buchberger(const VarList &vars, const std::vector<Polynomial> &gens, const MonomialOrder &order) {
  if (order.precedence().size() != vars.size())
    throw Error(ErrorCode::VariableMismatch, "monomial order arity does not match the variable list");

  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  auto push = [&](const Polynomial &p) {
    basis.push_back(monic(p, order));
    leads.push_back(basis.back().leading_monomial(order));
  };
  for (const auto &g : gens) {
    if (g.vars() != vars)
      throw Error(ErrorCode::VariableMismatch, "generator is not over the given variables");
    Polynomial r = reduce(g, basis, leads, order);
    if (!r.is_zero())
      push(r);
  }

  // Pending pairs (i, j), i < j; the pair with the smallest lcm is taken
  // first, ties broken by (j, i).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto best = pairs.begin();
    Monomial best_lcm = lcm(leads[best->first], leads[best->second]);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = lcm(leads[it->first], leads[it->second]);
      int c = order.compare(l, best_lcm);
      if (c < 0 || (c == 0 && std::tie(it->second, it->first) < std::tie(best->second, best->first))) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);
    if (best_lcm == leads[i] * leads[j])
      continue;
    Polynomial s = s_polynomial(basis[i], leads[i], basis[j], leads[j]);
    Polynomial r = reduce(s, basis, leads, order);
    if (r.is_zero())
      continue;
    push(r);
    std::size_t k = basis.size() - 1;
    for (std::size_t a = 0; a < k; ++a)
      pairs.emplace_back(a, k);
    if (leads[k].is_one())
      break;
  }

  // Minimalize: drop elements whose leading monomial is divisible by an
  // earlier-kept or other leading monomial.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j)
        continue;
      if (leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i))
        redundant = true;
    }
    if (!redundant)
      keep.push_back(i);
  }
  std::vector<Polynomial> minimal;
  std::vector<Monomial> min_leads;
  for (auto i : keep) {
    minimal.push_back(basis[i]);
    min_leads.push_back(leads[i]);
  }

  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i)
    reduced.push_back(monic(reduce(minimal[i], minimal, min_leads, order, i), order));

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial &a, const Polynomial &b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  return GroebnerBasis(vars, order, std::move(reduced));
}

Polynomial normal_form(const Polynomial &p, const GroebnerBasis &gb) {
  if (p.vars() != gb.vars())
    throw Error(ErrorCode::VariableMismatch, "polynomial is not over the basis variables");
  return reduce(p, gb.generators(), gb.leading_monomials(), gb.order());
}

bool ideal_membership(const Polynomial &p, const GroebnerBasis &gb) { return normal_form(p, gb).is_zero(); }

bool is_zero_dimensional(const GroebnerBasis &gb) {
  std::size_t n = gb.vars().size();
  for (std::size_t v = 0; v < n; ++v) {
    bool found = std::any_of(gb.leading_monomials().begin(), gb.leading_monomials().end(), [&](const Monomial &m) {
      return m.degree() == m[v] && m[v] > 0;
    });
    if (!found && !gb.is_unit_ideal())
      return false;
  }
  return true;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis &gb) {
  if (!is_zero_dimensional(gb))
    throw Error(ErrorCode::NotZeroDimensional, "the ideal is not zero-dimensional: some variable has no pure "
                                               "power among the leading monomials");
  std::size_t n = gb.vars().size();
  auto standard = [&](const Monomial &m) {
    return std::none_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                        [&](const Monomial &l) { return l.divides(m); });
  };
  std::set<Monomial> seen;
  std::vector<Monomial> frontier;
  Monomial one(n);
  if (standard(one)) {
    seen.insert(one);
    frontier.push_back(one);
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto &m : frontier)
      for (std::size_t v = 0; v < n; ++v) {
        Monomial mv = m * Monomial::variable(n, v);
        if (!seen.count(mv) && standard(mv)) {
          seen.insert(mv);
          next.push_back(mv);
        }
      }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const Monomial &a, const Monomial &b) { return gb.order().less(a, b); });
  return out;
}

} // namespace artin
