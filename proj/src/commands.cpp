#include "artin/commands.hpp"

#include "artin/berger.hpp"
#include "artin/error.hpp"

#include <json.hpp>

#include <sstream>

namespace artin {

namespace {

using json = nlohmann::ordered_json;

json rational_row(const Vec &v) {
  json row = json::array();
  for (const auto &q : v)
    row.push_back(q.get_str());
  return row;
}

json subspace_json(const ArtinAlgebra &a, const Subspace &s) {
  json elems = json::array(), rows = json::array();
  for (const auto &b : s.basis()) {
    elems.push_back(a.format(b));
    rows.push_back(rational_row(b));
  }
  return json{{"dim", s.dim()}, {"elements", elems}, {"rows", rows}};
}

json hom_json(const TruncatedHom &h) {
  json images = json::array();
  for (const auto &im : h.images())
    images.push_back(rational_row(im.coeffs));
  return json{{"N", h.truncation()}, {"images", images}, {"text", h.to_string()}};
}

json report_json(const WitnessReport &r) {
  json certs = json::array();
  for (const auto &c : r.certificates)
    certs.push_back(json{{"route", c.route}, {"image", c.image}});
  json viol = json::array();
  for (const auto &h : r.violations)
    viol.push_back(hom_json(h));
  json out{{"witness", r.witness},        {"witness_nonzero", r.witness_nonzero}, {"nonzero_certificates", certs},
           {"homs_tested", r.homs_tested}, {"all_killed", r.all_killed},          {"violations", viol}};
  if (!r.note.empty())
    out["note"] = r.note;
  return out;
}

SearchOptions search_options(const RunOptions &opt, const ArtinAlgebra &a) {
  SearchOptions s;
  s.n_max = opt.nmax;
  s.budget = opt.budget;
  s.seed = opt.seed;
  s.strategies = opt.strategies;
  if (opt.images) {
    std::vector<TruncPoly> ims;
    std::istringstream parts(*opt.images);
    std::string piece;
    while (std::getline(parts, piece, ';'))
      ims.push_back(parse_trunc_poly(piece, opt.nmax));
    if (ims.size() != a.nvars())
      throw Error(ErrorCode::InvalidArgument, "--images needs one image per variable");
    s.user_images = std::move(ims);
  }
  return s;
}

std::vector<TruncatedHom> find_homs(const AlgebraPtr &a, const RunOptions &opt) {
  SearchOptions s = search_options(opt, *a);
  bool user = std::find(s.strategies.begin(), s.strategies.end(), SearchStrategy::User) != s.strategies.end();
  if (user && s.user_images.empty())
    throw Error(ErrorCode::InvalidArgument, "the user strategy needs --images");
  return search_homs(a, s);
}

struct Context {
  AlgebraPtr algebra;
  json results = json::object();
  std::ostringstream text;
  int exit_code = kExitOk;
};

void cmd_analyze(Context &ctx) {
  const auto &a = *ctx.algebra;
  auto &res = ctx.results;
  auto &out = ctx.text;

  json basis = json::array(), gb = json::array();
  for (const auto &m : a.basis())
    basis.push_back(monomial_to_string(m, a.vars()));
  for (const auto &g : a.groebner().generators())
    gb.push_back(g.to_string());
  res["dim"] = a.dim();
  res["basis"] = basis;
  res["groebner_basis"] = gb;
  out << "dim: " << a.dim() << "\nbasis:";
  for (const auto &b : basis)
    out << " " << b.get<std::string>();
  out << "\n";

  GradingInfo gi = grading_info(a);
  json dims = json::array();
  for (const auto &c : gi.components)
    dims.push_back(c.dim());
  res["grading"] = json{{"standard_graded", gi.is_standard_graded},
                        {"component_dims", dims},
                        {"nilpotency_index", gi.nilpotency_index}};
  out << "standard graded: " << (gi.is_standard_graded ? "yes" : "no");
  if (gi.is_standard_graded)
    out << " (component dims " << dims.dump() << ")";
  out << "\nnilpotency index: " << gi.nilpotency_index << "\n";

  Subspace nil = nilradical(a);
  res["nilradical"] = subspace_json(a, nil);
  bool local = nil.dim() + 1 == a.dim();
  res["local_over_Q"] = local;
  out << "nilradical dim: " << nil.dim() << "\nlocal over Q: " << (local ? "yes" : "no") << "\n";

  auto module = kahler_module(ctx.algebra);
  Subspace h0 = h0_dR(*module);
  res["kahler_dim"] = module->dim();
  res["h0_dR"] = subspace_json(a, h0);
  out << "dim Omega_A: " << module->dim() << "\ndim H0_dR: " << h0.dim() << "\n";

  if (!local) {
    res["socle"] = nullptr;
    res["gorenstein"] = nullptr;
    res["embedding_dimension"] = nullptr;
    res["principal"] = nullptr;
    res["embedding_obstruction"] = nullptr;
    res["unembeddable_certified"] = nullptr;
    out << "(not local over Q: socle, Gorenstein and embedding data skipped)\n";
    return;
  }
  Subspace soc = socle(a);
  std::size_t edim = embedding_dimension(a);
  Subspace obstruction = embedding_obstruction(*module);
  res["socle"] = subspace_json(a, soc);
  res["gorenstein"] = soc.dim() == 1;
  res["embedding_dimension"] = edim;
  res["principal"] = edim <= 1;
  res["embedding_obstruction"] = subspace_json(a, obstruction);
  res["unembeddable_certified"] = !obstruction.is_zero();
  out << "socle:";
  for (const auto &b : soc.basis())
    out << " " << a.format(b);
  out << " (dim " << soc.dim() << ", " << (soc.dim() == 1 ? "Gorenstein" : "not Gorenstein") << ")\n";
  out << "embedding dimension: " << edim << (edim <= 1 ? " (principal)" : " (not principal)") << "\n";
  out << "embedding obstruction:";
  for (const auto &b : obstruction.basis())
    out << " " << a.format(b);
  out << (obstruction.is_zero() ? " 0" : "  => unembeddable") << "\n";
}

void cmd_homs(Context &ctx, const RunOptions &opt) {
  const auto &a = *ctx.algebra;
  auto homs = find_homs(ctx.algebra, opt);
  std::vector<Vec> centered;
  json residues = json::array();
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    Vec x = a.variable(v);
    Rational lambda = residue(a, x);
    residues.push_back(lambda.get_str());
    axpy(x, -lambda, a.one());
    centered.push_back(std::move(x));
  }
  json list = json::array();
  ctx.text << homs.size() << " verified homs\n";
  for (const auto &h : homs) {
    json j = hom_json(h);
    json vals = json::object();
    ctx.text << "  " << h.to_string() << "  nu:";
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      std::string nu = valuation(h, centered[v]).to_string();
      vals[a.vars()[v]] = nu;
      ctx.text << " " << a.vars()[v] << "=" << nu;
    }
    ctx.text << "\n";
    j["valuations"] = vals;
    list.push_back(std::move(j));
  }
  ctx.results["residues"] = residues;
  ctx.results["count"] = homs.size();
  ctx.results["homs"] = list;
}

json critdeg_json(const CriticalDegreeReport &rep) {
  json witnesses = json::object();
  for (const auto &[deg, h] : rep.witnesses)
    witnesses[std::to_string(deg)] = hom_json(h);
  json maxdims = json::array();
  for (std::size_t i = 1; i < rep.max_image_dimension.size(); ++i)
    maxdims.push_back(rep.max_image_dimension[i]);
  return json{{"lower_bound", rep.lower_bound},     {"upper_bound", rep.upper_bound},
              {"exact", rep.exact()},               {"degrees_achieved", rep.degrees_achieved},
              {"max_image_dimension", maxdims},     {"homs_examined", rep.homs_examined},
              {"witnesses", witnesses}};
}

void cmd_critdeg(Context &ctx, const RunOptions &opt) {
  auto rep = critical_degree(ctx.algebra, find_homs(ctx.algebra, opt));
  ctx.results["critical_degree"] = critdeg_json(rep);
  ctx.text << "critical degree: " << rep.lower_bound << " <= crit.deg <= " << rep.upper_bound
           << (rep.exact() ? " (exact)" : "") << "\n";
  for (const auto &[deg, h] : rep.witnesses)
    ctx.text << "  degree " << deg << " witness: " << h.to_string() << "\n";
  ctx.text << "homs examined: " << rep.homs_examined << "\n";
}

void finish_witness(Context &ctx, const WitnessReport &rep, const std::string &key) {
  ctx.results[key] = report_json(rep);
  ctx.text << key << ": " << rep.witness << "\n"
           << "  nonzero: " << (rep.witness_nonzero ? "yes" : "no") << ", homs tested: " << rep.homs_tested
           << ", all killed: " << (rep.all_killed ? "yes" : "NO") << "\n";
  if (!rep.note.empty())
    ctx.text << "  note: " << rep.note << "\n";
  for (const auto &h : rep.violations)
    ctx.text << "  VIOLATION: " << h.to_string() << "\n";
  if (!rep.all_killed)
    ctx.exit_code = kExitInvariantViolated;
  else if (rep.homs_tested == 0 && ctx.exit_code == kExitOk)
    ctx.exit_code = kExitBudget;
}

void cmd_tau(Context &ctx, const RunOptions &opt) {
  const auto &a = *ctx.algebra;
  auto homs = find_homs(ctx.algebra, opt);
  auto module = kahler_module(ctx.algebra);
  if (opt.witness) {
    Vec w = a.from_polynomial(parse_polynomial(*opt.witness, a.vars()));
    std::size_t element_survives = 0;
    for (const auto &h : homs)
      if (!h.apply(w).is_zero())
        ++element_survives;
    ctx.results["element"] = a.format(w);
    ctx.results["element_not_killed_count"] = element_survives;
    ctx.text << "element " << a.format(w) << " survives under " << element_survives << " homs\n";
    finish_witness(ctx, tau_membership_check(differential(module, w), homs), "tau");
    return;
  }

  auto crit = critical_degree(ctx.algebra, homs);
  unsigned r = opt.r.value_or(crit.lower_bound);
  auto wit = crit.witnesses.find(r);
  if (wit == crit.witnesses.end())
    throw Error(ErrorCode::WitnessInsufficient, "no hom in the family has dim h(A_" + std::to_string(r) + ") >= 2");
  SurjectionToQ surj = surjection_to_q(ctx.algebra, wit->second, r);
  json sj{{"r", r},
          {"x", a.format(surj.x)},
          {"y", a.format(surj.y)},
          {"nu_x", surj.nu_x.to_string()},
          {"nu_y", surj.nu_y.to_string()},
          {"iso_check", surj.iso_check},
          {"iso_details", surj.iso_details},
          {"witness_hom", hom_json(wit->second)}};
  ctx.results["critical_degree"] = critdeg_json(crit);
  ctx.results["surjection"] = sj;
  ctx.text << "r = " << r << ", x = " << a.format(surj.x) << ", y = " << a.format(surj.y)
           << ", iso check: " << (surj.iso_check ? "passed" : "FAILED") << "\n";
  std::vector<AlgebraMap> certs;
  if (surj.surjection)
    certs.push_back(*surj.surjection);
  finish_witness(ctx, tau_membership_check(omega_witness(module, surj.x, surj.y, r), homs, certs), "tau");
}

void cmd_socle_kill(Context &ctx, const RunOptions &opt) {
  socle_generator(*ctx.algebra); // NotGorenstein / PrincipalAlgebra before any search
  auto homs = find_homs(ctx.algebra, opt);
  finish_witness(ctx, socle_kill_check(ctx.algebra, homs), "socle_kill");
  finish_witness(ctx, tau_witness_gorenstein(kahler_module(ctx.algebra), homs), "socle_differential");
}

json options_json(const RunOptions &opt) {
  json strategies = json::array();
  for (auto s : opt.strategies)
    strategies.push_back(to_string(s));
  json j{{"nmax", opt.nmax}, {"budget", opt.budget}, {"seed", opt.seed}, {"strategies", strategies}};
  j["witness"] = opt.witness ? json(*opt.witness) : json(nullptr);
  j["images"] = opt.images ? json(*opt.images) : json(nullptr);
  j["r"] = opt.r ? json(*opt.r) : json(nullptr);
  return j;
}

} // namespace

RunReport run_command(const std::string &command, const AlgebraFile &file, const RunOptions &options) {
  RunReport report;
  report.command = command;
  json doc;
  doc["command"] = command;
  json gens = json::array();
  for (const auto &g : file.gens)
    gens.push_back(g.to_string());
  doc["input"] = json{{"vars", file.vars}, {"gens", gens}};
  doc["options"] = options_json(options);

  Context ctx;
  try {
    if (command != "analyze" && command != "homs" && command != "critdeg" && command != "tau" &&
        command != "socle-kill")
      throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
    ctx.algebra = build_algebra(file.vars, file.gens);
    if (command == "analyze")
      cmd_analyze(ctx);
    else if (command == "homs")
      cmd_homs(ctx, options);
    else if (command == "critdeg")
      cmd_critdeg(ctx, options);
    else if (command == "tau")
      cmd_tau(ctx, options);
    else
      cmd_socle_kill(ctx, options);
    doc["status"] = ctx.exit_code == kExitOk ? "ok" : ctx.exit_code == kExitInvariantViolated ? "violation" : "budget";
    doc["results"] = ctx.results;
    report.text = ctx.text.str();
    report.exit_code = ctx.exit_code;
  } catch (const Error &e) {
    doc["status"] = "error";
    doc["error"] = json{{"code", to_string(e.code())}, {"message", e.what()}};
    report.text = std::string("error: ") + to_string(e.code()) + ": " + e.what() + "\n";
    report.exit_code = e.code() == ErrorCode::BudgetExhausted ? kExitBudget : kExitInputError;
  }
  doc["exit_code"] = report.exit_code;
  report.json = doc.dump(2) + "\n";
  return report;
}

} // namespace artin
