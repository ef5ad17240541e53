#include "artin/berger.hpp"

#include "artin/error.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace artin {

AlgebraPtr q_algebra(unsigned r) {
  if (r < 1)
    throw Error(ErrorCode::InvalidArgument, "Q(r) needs r >= 1");
  VarList xy{"X", "Y"};
  std::vector<Polynomial> gens{
      Polynomial::term(xy, Monomial(std::vector<std::uint32_t>{r + 1, 0}), 1),
      Polynomial::term(xy, Monomial(std::vector<std::uint32_t>{r, 1}), 1),
      Polynomial::term(xy, Monomial(std::vector<std::uint32_t>{0, 2}), 1),
  };
  return build_algebra(xy, gens);
}

namespace {

void require_graded(const ArtinAlgebra &a) {
  if (!a.groebner().is_homogeneous())
    throw Error(ErrorCode::NotGraded, "the algebra is not standard graded");
}

void require_nonprincipal(const ArtinAlgebra &a) {
  if (is_principal_ideal_algebra(a))
    throw Error(ErrorCode::PrincipalAlgebra, "the algebra is a principal ideal algebra");
}

} // namespace

std::size_t image_dimension(const TruncatedHom &h, unsigned degree) {
  std::vector<Vec> cols;
  for (auto i : degree_component(*h.source(), degree)) {
    Vec c(h.truncation() + 1);
    for (std::size_t r = 0; r <= h.truncation(); ++r)
      c[r] = h.matrix().at(r, i);
    cols.push_back(std::move(c));
  }
  if (cols.empty())
    return 0;
  return rank(Matrix::from_rows(h.truncation() + 1, cols));
}

TruncatedHom tangent_witness(const AlgebraPtr &a) {
  const auto &alg = *a;
  Subspace m = maximal_ideal(alg);
  Subspace m2 = product(alg, m, m);
  if (m.dim() - m2.dim() < 2)
    throw Error(ErrorCode::PrincipalAlgebra, "embedding dimension below 2");

  // Coordinates on M/M^2: complete a basis of M^2 to one of M and read off
  // the first two complementary coordinates.
  std::vector<Vec> basis = m2.basis();
  std::vector<std::size_t> complement;
  for (const auto &v : m.basis()) {
    std::vector<Vec> trial = basis;
    trial.push_back(v);
    if (rank(Matrix::from_rows(alg.dim(), trial)) == trial.size()) {
      basis = std::move(trial);
      complement.push_back(basis.size() - 1);
    }
  }
  Matrix coords = Matrix::from_columns(alg.dim(), basis);
  std::vector<TruncPoly> images;
  for (std::size_t v = 0; v < alg.nvars(); ++v) {
    Vec x = alg.variable(v);
    Rational lambda = residue(alg, x);
    Vec centered = x;
    axpy(centered, -lambda, alg.one());
    auto c = solve(coords, centered);
    TruncPoly p = TruncPoly::constant(3, lambda);
    p.coeffs[2] = (*c)[complement[0]];
    p.coeffs[3] = (*c)[complement[1]];
    images.push_back(std::move(p));
  }
  return TruncatedHom::make(a, 3, std::move(images));
}

namespace {

// Stored witness per degree: widest image first, then the plainest hom
// (fewest terms, lowest valuations, smallest coefficients). Homs are sorted
// beforehand, so remaining ties go to the first one.
struct WitnessKey {
  std::size_t neg_rank;
  std::size_t terms;
  std::vector<TruncValue> valuations;
  mpz_class height;
  bool operator<(const WitnessKey &o) const {
    return std::tie(neg_rank, terms, valuations, height) < std::tie(o.neg_rank, o.terms, o.valuations, o.height);
  }
};

WitnessKey witness_key(const TruncatedHom &h, std::size_t rank) {
  WitnessKey k{std::numeric_limits<std::size_t>::max() - rank, 0, {}, 0};
  for (const auto &img : h.images()) {
    auto ord = img.order();
    k.valuations.push_back(ord ? TruncValue::finite(*ord) : TruncValue::infinity());
    for (const auto &c : img.coeffs)
      if (c != 0) {
        ++k.terms;
        k.height += abs(c.get_num()) + c.get_den();
      }
  }
  return k;
}

} // namespace

CriticalDegreeReport critical_degree(const AlgebraPtr &a, std::vector<TruncatedHom> homs) {
  require_graded(*a);
  require_nonprincipal(*a);
  TruncatedHom tangent = tangent_witness(a);
  if (std::find(homs.begin(), homs.end(), tangent) == homs.end())
    homs.push_back(tangent);
  std::sort(homs.begin(), homs.end());

  CriticalDegreeReport rep;
  rep.upper_bound = static_cast<unsigned>(grading_info(*a).nilpotency_index);
  rep.max_image_dimension.assign(rep.upper_bound + 1, 0);
  rep.homs_examined = homs.size();
  std::map<unsigned, WitnessKey> best;
  for (const auto &h : homs)
    for (unsigned i = 1; i <= rep.upper_bound; ++i) {
      std::size_t d = image_dimension(h, i);
      rep.max_image_dimension[i] = std::max(rep.max_image_dimension[i], d);
      if (d < 2)
        continue;
      WitnessKey key = witness_key(h, d);
      auto it = best.find(i);
      if (it == best.end() || key < it->second) {
        best[i] = key;
        rep.witnesses.insert_or_assign(i, h);
      }
    }
  for (const auto &[deg, h] : rep.witnesses) {
    rep.degrees_achieved.push_back(deg);
    rep.lower_bound = std::max(rep.lower_bound, deg);
  }
  return rep;
}

CriticalDegreeReport critical_degree_search(const AlgebraPtr &a, const SearchOptions &options) {
  require_graded(*a);
  require_nonprincipal(*a);
  return critical_degree(a, search_homs(a, options));
}

SurjectionToQ surjection_to_q(const AlgebraPtr &a, const TruncatedHom &h, unsigned r) {
  const auto &alg = *a;
  require_graded(alg);
  if (r < 1)
    throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  if (image_dimension(h, r) < 2)
    throw Error(ErrorCode::WitnessInsufficient, "dim h(A_" + std::to_string(r) + ") < 2");

  std::vector<Vec> degree_one;
  for (auto i : degree_component(alg, 1))
    degree_one.push_back(unit_vec(alg.dim(), i));
  auto tri = triangularize(h, degree_one);

  SurjectionToQ out;
  out.r = r;
  out.x = tri.at(0);
  out.y = tri.at(1);
  out.nu_x = valuation(h, out.x);
  out.nu_y = valuation(h, out.y);
  if (out.nu_y.is_infinite())
    throw Error(ErrorCode::WitnessInsufficient, "fewer than two finite valuations in degree one");
  out.rest.assign(tri.begin() + 2, tri.end());

  std::vector<Vec> extra{alg.power(out.x, r + 1), alg.multiply(alg.power(out.x, r), out.y),
                         alg.multiply(out.y, out.y)};
  extra.insert(extra.end(), out.rest.begin(), out.rest.end());
  Quotient quo = quotient_algebra(a, extra);
  out.quotient = quo.algebra;
  out.q = q_algebra(r);

  Vec px = quo.projection.apply(out.x), py = quo.projection.apply(out.y);
  const auto &aq = *quo.algebra;
  bool ok = aq.dim() == 2 * r + 1;
  out.iso_details.push_back("dim A/I = " + std::to_string(aq.dim()) + ", dim Q(r) = " + std::to_string(2 * r + 1));
  for (unsigned i = 1; i <= r; ++i) {
    Vec xi = aq.power(px, i);
    Vec xiy = aq.multiply(aq.power(px, i - 1), py);
    std::size_t rk = rank(Matrix::from_rows(aq.dim(), {xi, xiy}));
    out.iso_details.push_back("degree " + std::to_string(i) + ": rank{x^i, x^(i-1)y} = " + std::to_string(rk));
    ok = ok && rk == 2;
  }
  AlgebraMap phi = AlgebraMap::from_variable_images(out.q, quo.algebra, {px, py});
  ok = ok && rank(phi.matrix()) == out.q->dim();
  out.iso_check = ok;
  if (!ok)
    return out;

  std::vector<Vec> images;
  for (std::size_t v = 0; v < alg.nvars(); ++v) {
    auto c = solve(phi.matrix(), quo.projection.apply(alg.variable(v)));
    images.push_back(*c);
  }
  out.surjection = AlgebraMap::from_variable_images(a, out.q, std::move(images));
  return out;
}

DifferentialForm omega_witness(const KahlerPtr &module, const Vec &x, const Vec &y, unsigned r) {
  const auto &alg = *module->algebra();
  require_graded(alg);
  if (r < 1)
    throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  auto degree_one = [&](const Vec &v) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if (sgn(v[i]) != 0 && alg.basis()[i].degree() != 1)
        return false;
    return true;
  };
  if (!degree_one(x) || !degree_one(y))
    throw Error(ErrorCode::NotDegreeOne, "omega needs degree-one elements");
  DifferentialForm inner = act(x, differential(module, y)) - act(y, differential(module, x));
  return act(alg.power(x, r - 1), inner);
}

WitnessReport tau_membership_check(const DifferentialForm &w, const std::vector<TruncatedHom> &homs,
                                   const std::vector<AlgebraMap> &certificate_maps) {
  WitnessReport rep;
  rep.witness = w.to_string();
  rep.witness_nonzero = !w.is_zero();
  if (rep.witness_nonzero)
    rep.certificates.push_back({"Omega_A", w.to_string()});
  for (const auto &map : certificate_maps) {
    KahlerPtr target = kahler_module(map.target());
    DifferentialForm img = pushforward(map, w, target);
    if (!img.is_zero())
      rep.certificates.push_back({"pushforward to quotient of dim " + std::to_string(map.target()->dim()),
                                  img.to_string()});
  }
  for (const auto &h : homs) {
    ++rep.homs_tested;
    if (!pushforward_kills(h, w))
      rep.violations.push_back(h);
  }
  rep.all_killed = rep.violations.empty();
  return rep;
}

Vec socle_generator(const ArtinAlgebra &a) {
  Subspace s = socle(a);
  if (s.dim() != 1)
    throw Error(ErrorCode::NotGorenstein, "socle has dimension " + std::to_string(s.dim()));
  require_nonprincipal(a);
  return s.basis().front();
}

WitnessReport socle_kill_check(const AlgebraPtr &a, const std::vector<TruncatedHom> &homs) {
  Vec s = socle_generator(*a);
  WitnessReport rep;
  rep.witness = a->format(s);
  rep.witness_nonzero = true;
  rep.certificates.push_back({"socle", rep.witness});
  for (const auto &h : homs) {
    ++rep.homs_tested;
    if (!h.apply(s).is_zero())
      rep.violations.push_back(h);
  }
  rep.all_killed = rep.violations.empty();
  return rep;
}

WitnessReport tau_witness_gorenstein(const KahlerPtr &module, const std::vector<TruncatedHom> &homs) {
  Vec s = socle_generator(*module->algebra());
  DifferentialForm ds = differential(module, s);
  WitnessReport rep = tau_membership_check(ds, homs);
  rep.witness = "d(" + module->algebra()->format(s) + ") = " + ds.to_string();
  if (ds.is_zero())
    rep.note = "d(socle) = 0: the socle-differential route gives no witness for this algebra";
  return rep;
}

} // namespace artin
