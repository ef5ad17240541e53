#include "artin/truncated.hpp"

#include "artin/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace artin {

// --- TruncPoly --------------------------------------------------------------

std::optional<unsigned> TruncPoly::order() const {
  for (unsigned i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0)
      return i;
  return std::nullopt;
}

TruncPoly TruncPoly::monomial(unsigned n, unsigned e, const Rational &c) {
  TruncPoly p(n);
  if (e <= n)
    p.coeffs[e] = c;
  return p;
}

TruncPoly TruncPoly::constant(unsigned n, const Rational &c) { return monomial(n, 0, c); }

TruncPoly TruncPoly::operator+(const TruncPoly &o) const {
  if (o.coeffs.size() != coeffs.size())
    throw Error(ErrorCode::IncompatibleAlgebras, "truncations differ");
  TruncPoly r = *this;
  axpy(r.coeffs, 1, o.coeffs);
  return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly &o) const {
  if (o.coeffs.size() != coeffs.size())
    throw Error(ErrorCode::IncompatibleAlgebras, "truncations differ");
  std::size_t n = coeffs.size();
  TruncPoly r(truncation());
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(coeffs[i]) == 0)
      continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (sgn(o.coeffs[j]) != 0)
        r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  }
  return r;
}

TruncPoly TruncPoly::derivative() const {
  TruncPoly r(truncation());
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    r.coeffs[i - 1] = coeffs[i] * static_cast<unsigned long>(i);
  return r;
}

std::string TruncPoly::to_string() const {
  Polynomial p({"t"});
  for (unsigned i = 0; i < coeffs.size(); ++i)
    p.add_term(Monomial(std::vector<std::uint32_t>{i}), coeffs[i]);
  return p.to_string();
}

TruncPoly parse_trunc_poly(std::string_view text, unsigned n) {
  Polynomial p = parse_polynomial(text, {"t"});
  TruncPoly r(n);
  for (const auto &[m, c] : p.terms())
    if (m[0] <= n)
      r.coeffs[m[0]] = c;
  return r;
}

// --- evaluation -------------------------------------------------------------

namespace {

class Evaluator {
public:
  Evaluator(unsigned n, const std::vector<TruncPoly> &images) : n_(n), images_(images), powers_(images.size()) {}

  const TruncPoly &power(std::size_t v, std::uint32_t e) {
    auto &cache = powers_[v];
    if (cache.empty())
      cache.push_back(TruncPoly::constant(n_, 1));
    while (cache.size() <= e)
      cache.push_back(cache.back() * images_[v]);
    return cache[e];
  }

  TruncPoly eval(const Polynomial &p) {
    TruncPoly out(n_);
    for (const auto &[m, c] : p.terms()) {
      TruncPoly t = TruncPoly::constant(n_, c);
      for (std::size_t v = 0; v < m.nvars() && !t.is_zero(); ++v)
        if (m[v] > 0)
          t = t * power(v, m[v]);
      axpy(out.coeffs, 1, t.coeffs);
    }
    return out;
  }

private:
  unsigned n_;
  const std::vector<TruncPoly> &images_;
  std::vector<std::vector<TruncPoly>> powers_;
};

/// Index of the first presentation generator not killed, if any.
std::optional<std::pair<std::size_t, TruncPoly>> first_violation(const ArtinAlgebra &a, unsigned n,
                                                                 const std::vector<TruncPoly> &images) {
  Evaluator ev(n, images);
  const auto &gens = a.presentation();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    TruncPoly r = ev.eval(gens[g]);
    if (!r.is_zero())
      return std::make_pair(g, r);
  }
  return std::nullopt;
}

} // namespace

// --- TruncatedHom -----------------------------------------------------------

TruncatedHom TruncatedHom::make(AlgebraPtr source, unsigned n, std::vector<TruncPoly> images) {
  if (images.size() != source->nvars())
    throw Error(ErrorCode::InvalidArgument, "one image per variable is required");
  for (const auto &im : images)
    if (im.truncation() != n)
      throw Error(ErrorCode::InvalidArgument, "image truncation does not match N");
  if (auto bad = first_violation(*source, n, images))
    throw Error(ErrorCode::RelationViolated, "relation " + source->presentation()[bad->first].to_string() +
                                                 " has residual " + bad->second.to_string() + " in Q[t]/(t^" +
                                                 std::to_string(n + 1) + ")");
  Evaluator ev(n, images);
  std::vector<Vec> cols;
  for (const auto &m : source->basis())
    cols.push_back(ev.eval(Polynomial::term(source->vars(), m, 1)).coeffs);
  Matrix mat = Matrix::from_columns(n + 1, cols);
  return TruncatedHom(std::move(source), n, std::move(images), std::move(mat));
}

TruncPoly TruncatedHom::apply(const Vec &a) const {
  TruncPoly r(n_);
  r.coeffs = matrix_.apply(a);
  return r;
}

AlgebraMap TruncatedHom::as_algebra_map(const AlgebraPtr &target) const {
  if (target->nvars() != 1 || target->dim() != n_ + 1)
    throw Error(ErrorCode::IncompatibleAlgebras, "target is not Q[t]/(t^" + std::to_string(n_ + 1) + ")");
  std::vector<Vec> imgs;
  for (const auto &im : images_)
    imgs.push_back(im.coeffs);
  return AlgebraMap::from_variable_images(source_, target, std::move(imgs));
}

bool TruncatedHom::operator<(const TruncatedHom &o) const {
  if (n_ != o.n_)
    return n_ < o.n_;
  for (std::size_t v = 0; v < images_.size() && v < o.images_.size(); ++v) {
    const auto &a = images_[v].coeffs, &b = o.images_[v].coeffs;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i])
        return a[i] < b[i];
  }
  return images_.size() < o.images_.size();
}

bool TruncatedHom::operator==(const TruncatedHom &o) const { return n_ == o.n_ && images_ == o.images_; }

std::string TruncatedHom::to_string() const {
  std::string out = "N=" + std::to_string(n_) + ":";
  for (std::size_t v = 0; v < images_.size(); ++v)
    out += " " + source_->vars()[v] + "->" + images_[v].to_string() + (v + 1 < images_.size() ? "," : "");
  return out;
}

AlgebraPtr truncated_algebra(unsigned n) {
  VarList t{"t"};
  return build_algebra(t, {Polynomial::term(t, Monomial(std::vector<std::uint32_t>{n + 1}), 1)});
}

TruncValue valuation(const TruncatedHom &h, const Vec &a) {
  auto ord = h.apply(a).order();
  return ord ? TruncValue::finite(*ord) : TruncValue::infinity();
}

std::vector<Vec> triangularize(const TruncatedHom &h, const std::vector<Vec> &elements) {
  std::size_t dim = h.source()->dim();
  if (rank(Matrix::from_rows(dim, elements)) != elements.size())
    throw Error(ErrorCode::DependentInput, "triangularize needs linearly independent elements");
  std::size_t width = h.truncation() + 1;
  std::vector<Vec> rows;
  for (const auto &a : elements) {
    Vec row = h.apply(a).coeffs;
    row.insert(row.end(), a.begin(), a.end());
    rows.push_back(std::move(row));
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < width && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && sgn(rows[sel][col]) == 0)
      ++sel;
    if (sel == rows.size())
      continue;
    std::swap(rows[sel], rows[lead]);
    for (std::size_t r = lead + 1; r < rows.size(); ++r)
      if (sgn(rows[r][col]) != 0)
        axpy(rows[r], -rows[r][col] / rows[lead][col], rows[lead]);
    ++lead;
  }
  std::vector<Vec> out;
  for (auto &row : rows)
    out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(width), row.end());
  return out;
}

TruncPoly pushforward_form(const TruncatedHom &h, const DifferentialForm &w) {
  if (w.module->algebra().get() != h.source().get())
    throw Error(ErrorCode::IncompatibleAlgebras, "form does not live over the hom's source");
  auto comps = w.components();
  TruncPoly total(h.truncation());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (is_zero(comps[j]))
      continue;
    total = total + h.apply(comps[j]) * h.images()[j].derivative();
  }
  total.coeffs.back() = 0;
  return total;
}

bool pushforward_kills(const TruncatedHom &h, const DifferentialForm &w) { return pushforward_form(h, w).is_zero(); }

// --- search -----------------------------------------------------------------

std::optional<SearchStrategy> parse_strategy(std::string_view name) {
  if (name == "monomial")
    return SearchStrategy::Monomial;
  if (name == "dense-random")
    return SearchStrategy::DenseRandom;
  if (name == "user")
    return SearchStrategy::User;
  return std::nullopt;
}

const char *to_string(SearchStrategy s) {
  switch (s) {
  case SearchStrategy::Monomial: return "monomial";
  case SearchStrategy::DenseRandom: return "dense-random";
  case SearchStrategy::User: return "user";
  }
  return "?";
}

std::vector<Rational> default_coefficient_pool() {
  return {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2), Rational(3), Rational(1, 3)};
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng &rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// Per-variable choice for the monomial strategy: exponent 0 means the
/// variable goes to its residue only.
struct Choice {
  unsigned exponent;
  std::size_t coef;
  auto operator<=>(const Choice &) const = default;
};

std::vector<TruncPoly> monomial_images(const std::vector<Choice> &choice, unsigned n, const std::vector<Rational> &res,
                                       const std::vector<Rational> &pool) {
  std::vector<TruncPoly> images;
  for (std::size_t v = 0; v < choice.size(); ++v) {
    TruncPoly p = TruncPoly::constant(n, res[v]);
    if (choice[v].exponent > 0)
      p.coeffs[choice[v].exponent] += pool[choice[v].coef];
    images.push_back(std::move(p));
  }
  return images;
}

/// Dimension of the image of A under a monomial candidate with all residues
/// zero: basis monomial x^a goes to c*t^{sum a_i e_i}, so the rank is the
/// number of distinct surviving exponents.
std::size_t monomial_rank(const ArtinAlgebra &a, const std::vector<Choice> &choice, unsigned n) {
  std::set<unsigned> seen;
  for (const auto &m : a.basis()) {
    unsigned k = 0;
    bool zero = false;
    for (std::size_t v = 0; v < choice.size(); ++v) {
      if (m[v] == 0)
        continue;
      if (choice[v].exponent == 0) {
        zero = true;
        break;
      }
      k += m[v] * choice[v].exponent;
    }
    if (!zero && k <= n)
      seen.insert(k);
  }
  return seen.size();
}

using Found = std::vector<std::pair<unsigned, std::vector<TruncPoly>>>;

Found monomial_search(const ArtinAlgebra &a, const std::vector<Rational> &res,
                                                    const SearchOptions &opt, Rng &rng) {
  std::size_t m = a.nvars();
  const auto &pool = opt.pool;
  bool centered = std::all_of(res.begin(), res.end(), [](const Rational &r) { return sgn(r) == 0; });

  // One ordered list of valid candidates per truncation.
  std::vector<std::vector<std::vector<Choice>>> per_n;
  for (unsigned n = 1; n <= opt.n_max; ++n) {
    std::vector<Choice> options{{0, 0}};
    for (unsigned e = 1; e <= n; ++e)
      for (std::size_t c = 0; c < pool.size(); ++c)
        options.push_back({e, c});

    double space = 1;
    for (std::size_t v = 0; v < m; ++v)
      space *= static_cast<double>(options.size());

    std::vector<std::vector<Choice>> candidates;
    if (space <= static_cast<double>(opt.candidate_cap)) {
      std::vector<std::size_t> idx(m, 0);
      for (;;) {
        std::vector<Choice> c;
        for (auto i : idx)
          c.push_back(options[i]);
        candidates.push_back(std::move(c));
        std::size_t v = 0;
        while (v < m && ++idx[v] == options.size())
          idx[v++] = 0;
        if (v == m)
          break;
      }
    } else {
      std::set<std::vector<Choice>> sampled;
      for (std::size_t k = 0; k < opt.candidate_cap; ++k) {
        std::vector<Choice> c;
        for (std::size_t v = 0; v < m; ++v)
          c.push_back(options[pick(rng, options.size())]);
        std::vector<Choice> unit = c;
        for (auto &ch : unit)
          ch.coef = 0;
        if (sampled.insert(unit).second)
          candidates.push_back(std::move(unit));
        if (sampled.insert(c).second)
          candidates.push_back(std::move(c));
      }
    }

    // Group valid candidates by exponent profile.
    std::map<std::vector<unsigned>, std::vector<std::vector<Choice>>> groups;
    for (auto &c : candidates) {
      if (first_violation(a, n, monomial_images(c, n, res, pool)))
        continue;
      std::vector<unsigned> exps;
      for (const auto &ch : c)
        exps.push_back(ch.exponent);
      groups[exps].push_back(std::move(c));
    }

    // Profiles that keep more of A come first; coefficient variants are
    // taken round-robin across profiles in a seeded order.
    struct Group {
      std::size_t score;
      std::vector<std::vector<Choice>> members;
    };
    std::vector<Group> ordered;
    for (auto &[exps, members] : groups) {
      std::size_t score = centered ? monomial_rank(a, members.front(), n) : 0;
      std::shuffle(members.begin(), members.end(), rng);
      // The variant with every coefficient pool[0] leads its profile.
      auto unit = std::find_if(members.begin(), members.end(), [](const std::vector<Choice> &c) {
        return std::all_of(c.begin(), c.end(), [](const Choice &ch) { return ch.coef == 0; });
      });
      if (unit != members.end())
        std::rotate(members.begin(), unit, unit + 1);
      ordered.push_back({score, std::move(members)});
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const Group &x, const Group &y) { return x.score > y.score; });

    std::vector<std::vector<Choice>> list;
    for (std::size_t round = 0; list.size() < opt.budget; ++round) {
      bool any = false;
      for (auto &g : ordered) {
        if (round < g.members.size() && list.size() < opt.budget) {
          list.push_back(g.members[round]);
          any = true;
        }
      }
      if (!any)
        break;
    }
    per_n.push_back(std::move(list));
  }

  Found out;
  for (std::size_t round = 0; out.size() < opt.budget; ++round) {
    bool any = false;
    for (unsigned n = 1; n <= opt.n_max && out.size() < opt.budget; ++n) {
      const auto &list = per_n[n - 1];
      if (round < list.size()) {
        out.emplace_back(n, monomial_images(list[round], n, res, pool));
        any = true;
      }
    }
    if (!any)
      break;
  }
  return out;
}

Found dense_random_search(const ArtinAlgebra &a, const std::vector<Rational> &res,
                                                        const SearchOptions &opt, Rng &rng) {
  Found out;
  std::set<std::pair<unsigned, std::vector<Vec>>> seen;
  const auto &pool = opt.pool;
  std::size_t attempts = 50 * opt.budget;
  for (std::size_t k = 0; k < attempts && out.size() < opt.budget; ++k) {
    unsigned n = 1 + static_cast<unsigned>(pick(rng, opt.n_max));
    std::vector<TruncPoly> images;
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      TruncPoly p = TruncPoly::constant(n, res[v]);
      if (pick(rng, 8) != 0) {
        unsigned o = 1 + static_cast<unsigned>(pick(rng, n));
        p.coeffs[o] += pool[pick(rng, pool.size())];
        for (unsigned e = o + 1; e <= n; ++e)
          if (pick(rng, 2) == 0)
            p.coeffs[e] += pool[pick(rng, pool.size())];
      }
      images.push_back(std::move(p));
    }
    if (first_violation(a, n, images))
      continue;
    std::vector<Vec> key;
    for (const auto &p : images)
      key.push_back(p.coeffs);
    if (seen.emplace(n, std::move(key)).second)
      out.emplace_back(n, std::move(images));
  }
  return out;
}

} // namespace

std::vector<TruncatedHom> search_homs(const AlgebraPtr &a, const SearchOptions &options) {
  std::vector<Rational> res;
  for (std::size_t v = 0; v < a->nvars(); ++v)
    res.push_back(residue(*a, a->variable(v)));
  if (options.budget == 0 || options.n_max == 0)
    return {};

  std::vector<TruncatedHom> homs;
  for (auto strategy : options.strategies) {
    // Each strategy draws from its own stream so adding one does not
    // perturb another.
    Rng rng(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(strategy) + 1);
    Found found;
    switch (strategy) {
    case SearchStrategy::Monomial:
      found = monomial_search(*a, res, options, rng);
      break;
    case SearchStrategy::DenseRandom:
      found = dense_random_search(*a, res, options, rng);
      break;
    case SearchStrategy::User:
      if (options.user_images.size() != a->nvars())
        throw Error(ErrorCode::VariableMismatch, "expected " + std::to_string(a->nvars()) + " images, got " +
                                                     std::to_string(options.user_images.size()));
      // an explicit request: a violated relation is reported, not skipped
      TruncatedHom::make(a, options.n_max, options.user_images);
      found.emplace_back(options.n_max, options.user_images);
      break;
    }
    for (auto &[n, im] : found)
      homs.push_back(TruncatedHom::make(a, n, std::move(im)));
  }
  std::sort(homs.begin(), homs.end());
  homs.erase(std::unique(homs.begin(), homs.end()), homs.end());
  return homs;
}

} // namespace artin
