#include "artin/artin.h"

#include "artin/algebra.hpp"
#include "artin/algebra_file.hpp"
#include "artin/commands.hpp"
#include "artin/error.hpp"
#include "artin/kahler.hpp"

#include <cstring>
#include <sstream>

struct artin_algebra {
  artin::AlgebraFile file;
  artin::AlgebraPtr algebra;
  std::vector<std::string> basis_text;
};

struct artin_report {
  artin::RunReport report;
};

namespace {

thread_local std::string last_error;

artin_status to_status(artin::ErrorCode code) {
  using artin::ErrorCode;
  switch (code) {
  case ErrorCode::Parse: return ARTIN_E_PARSE;
  case ErrorCode::VariableMismatch: return ARTIN_E_VARIABLE_MISMATCH;
  case ErrorCode::NotZeroDimensional: return ARTIN_E_NOT_ZERO_DIMENSIONAL;
  case ErrorCode::TrivialAlgebra: return ARTIN_E_TRIVIAL_ALGEBRA;
  case ErrorCode::NotLocalOverQ: return ARTIN_E_NOT_LOCAL;
  case ErrorCode::NotGraded: return ARTIN_E_NOT_GRADED;
  case ErrorCode::PrincipalAlgebra: return ARTIN_E_PRINCIPAL;
  case ErrorCode::NotGorenstein: return ARTIN_E_NOT_GORENSTEIN;
  case ErrorCode::RelationViolated: return ARTIN_E_RELATION_VIOLATED;
  case ErrorCode::DependentInput: return ARTIN_E_DEPENDENT_INPUT;
  case ErrorCode::WitnessInsufficient: return ARTIN_E_WITNESS_INSUFFICIENT;
  case ErrorCode::NotDegreeOne: return ARTIN_E_NOT_DEGREE_ONE;
  case ErrorCode::IncompatibleAlgebras: return ARTIN_E_INCOMPATIBLE;
  case ErrorCode::InvalidArgument: return ARTIN_E_INVALID_ARGUMENT;
  case ErrorCode::BudgetExhausted: return ARTIN_E_BUDGET;
  }
  return ARTIN_E_INTERNAL;
}

template <class F> artin_status guarded(F &&f) {
  try {
    last_error.clear();
    f();
    return ARTIN_OK;
  } catch (const artin::Error &e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception &e) {
    last_error = e.what();
    return ARTIN_E_INTERNAL;
  }
}

artin_status null_argument() {
  last_error = "null argument";
  return ARTIN_E_INVALID_ARGUMENT;
}

artin_algebra *wrap(artin::AlgebraFile file) {
  auto alg = artin::build_algebra(file.vars, file.gens);
  auto *h = new artin_algebra{std::move(file), alg, {}};
  for (const auto &m : alg->basis())
    h->basis_text.push_back(artin::monomial_to_string(m, alg->vars()));
  return h;
}

char *dup_string(const std::string &s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

} // namespace

extern "C" {

void artin_run_options_init(artin_run_options *opts) {
  if (!opts)
    return;
  artin::RunOptions defaults;
  opts->nmax = defaults.nmax;
  opts->budget = defaults.budget;
  opts->seed = defaults.seed;
  opts->strategy = nullptr;
  opts->witness = nullptr;
  opts->images = nullptr;
  opts->r = 0;
}

const char *artin_status_string(artin_status status) {
  switch (status) {
  case ARTIN_OK: return "ok";
  case ARTIN_E_PARSE: return "ParseError";
  case ARTIN_E_VARIABLE_MISMATCH: return "VariableMismatch";
  case ARTIN_E_NOT_ZERO_DIMENSIONAL: return "NotZeroDimensional";
  case ARTIN_E_TRIVIAL_ALGEBRA: return "TrivialAlgebra";
  case ARTIN_E_NOT_LOCAL: return "NotLocalOverQ";
  case ARTIN_E_NOT_GRADED: return "NotGraded";
  case ARTIN_E_PRINCIPAL: return "PrincipalAlgebra";
  case ARTIN_E_NOT_GORENSTEIN: return "NotGorenstein";
  case ARTIN_E_RELATION_VIOLATED: return "RelationViolated";
  case ARTIN_E_DEPENDENT_INPUT: return "DependentInput";
  case ARTIN_E_WITNESS_INSUFFICIENT: return "WitnessInsufficient";
  case ARTIN_E_NOT_DEGREE_ONE: return "NotDegreeOne";
  case ARTIN_E_INCOMPATIBLE: return "IncompatibleAlgebras";
  case ARTIN_E_INVALID_ARGUMENT: return "InvalidArgument";
  case ARTIN_E_BUDGET: return "BudgetExhausted";
  case ARTIN_E_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char *artin_last_error(void) { return last_error.c_str(); }

const char *artin_version(void) { return "1.0.0"; }

artin_status artin_algebra_parse(const char *text, artin_algebra **out) {
  if (!text || !out)
    return null_argument();
  *out = nullptr;
  return guarded([&] { *out = wrap(artin::parse_algebra_file(text)); });
}

artin_status artin_algebra_create(const char *vars, const char *gens, artin_algebra **out) {
  if (!vars || !gens || !out)
    return null_argument();
  *out = nullptr;
  return guarded([&] {
    std::string text = std::string("vars: ") + vars + "\ngens: " + gens + "\n";
    *out = wrap(artin::parse_algebra_file(text));
  });
}

void artin_algebra_free(artin_algebra *alg) { delete alg; }

size_t artin_algebra_dim(const artin_algebra *alg) { return alg ? alg->algebra->dim() : 0; }

size_t artin_algebra_nvars(const artin_algebra *alg) { return alg ? alg->algebra->nvars() : 0; }

const char *artin_algebra_basis_monomial(const artin_algebra *alg, size_t index) {
  if (!alg || index >= alg->basis_text.size())
    return nullptr;
  return alg->basis_text[index].c_str();
}

artin_status artin_normal_form(const artin_algebra *alg, const char *poly, char **out) {
  if (!alg || !poly || !out)
    return null_argument();
  *out = nullptr;
  return guarded([&] {
    auto p = artin::parse_polynomial(poly, alg->algebra->vars());
    *out = dup_string(artin::normal_form(p, alg->algebra->groebner()).to_string());
  });
}

artin_status artin_ideal_contains(const artin_algebra *alg, const char *poly, int *out) {
  if (!alg || !poly || !out)
    return null_argument();
  return guarded([&] {
    auto p = artin::parse_polynomial(poly, alg->algebra->vars());
    *out = artin::ideal_membership(p, alg->algebra->groebner()) ? 1 : 0;
  });
}

artin_status artin_socle_dim(const artin_algebra *alg, size_t *out) {
  if (!alg || !out)
    return null_argument();
  return guarded([&] { *out = artin::socle(*alg->algebra).dim(); });
}

artin_status artin_kahler_dim(const artin_algebra *alg, size_t *out) {
  if (!alg || !out)
    return null_argument();
  return guarded([&] { *out = artin::KahlerModule(alg->algebra).dim(); });
}

artin_status artin_differential_is_zero(const artin_algebra *alg, const char *poly, int *out) {
  if (!alg || !poly || !out)
    return null_argument();
  return guarded([&] {
    auto module = artin::kahler_module(alg->algebra);
    auto a = alg->algebra->from_polynomial(artin::parse_polynomial(poly, alg->algebra->vars()));
    *out = artin::differential(module, a).is_zero() ? 1 : 0;
  });
}

void artin_string_free(char *s) { delete[] s; }

artin_status artin_run(const artin_algebra *alg, const char *command, const artin_run_options *opts,
                       artin_report **out) {
  if (!alg || !command || !out)
    return null_argument();
  *out = nullptr;
  return guarded([&] {
    artin::RunOptions ro;
    if (opts) {
      ro.nmax = opts->nmax;
      ro.budget = opts->budget;
      ro.seed = opts->seed;
      if (opts->strategy) {
        ro.strategies.clear();
        std::istringstream parts(opts->strategy);
        std::string name;
        while (std::getline(parts, name, ',')) {
          auto s = artin::parse_strategy(name);
          if (!s)
            throw artin::Error(artin::ErrorCode::InvalidArgument, "unknown strategy '" + name + "'");
          ro.strategies.push_back(*s);
        }
      }
      if (opts->witness)
        ro.witness = opts->witness;
      if (opts->images)
        ro.images = opts->images;
      if (opts->r > 0)
        ro.r = opts->r;
    }
    *out = new artin_report{artin::run_command(command, alg->file, ro)};
  });
}

const char *artin_report_json(const artin_report *report) { return report ? report->report.json.c_str() : ""; }

const char *artin_report_text(const artin_report *report) { return report ? report->report.text.c_str() : ""; }

int artin_report_exit_code(const artin_report *report) { return report ? report->report.exit_code : 2; }

void artin_report_free(artin_report *report) { delete report; }

} // extern "C"
