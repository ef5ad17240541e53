#include "artin/artin.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Args {
  std::string file;
  unsigned nmax = 12;
  std::size_t budget = 500;
  std::uint64_t seed = 1;
  std::string strategy;
  std::string witness;
  std::string images;
  unsigned r = 0;
  bool json = false;
};

void add_common(CLI::App *sub, Args &a, bool search) {
  sub->add_option("file", a.file, "algebra file")->required();
  sub->add_flag("--json", a.json, "print the JSON report instead of the summary");
  if (!search)
    return;
  sub->add_option("--nmax", a.nmax, "largest truncation order N");
  sub->add_option("--budget", a.budget, "homomorphisms per strategy");
  sub->add_option("--seed", a.seed, "search seed");
  sub->add_option("--strategy", a.strategy, "comma list of monomial, dense-random, user");
  sub->add_option("--images", a.images, "user images in t, ';'-separated");
}

// Errors before any report exists still get a JSON document when asked for.
int fail_early(const Args &a, const std::string &command, artin_status st, const std::string &msg) {
  if (a.json) {
    std::cout << "{\n  \"command\": \"" << command << "\",\n  \"status\": \"error\",\n  \"error\": {\n"
              << "    \"code\": \"" << artin_status_string(st) << "\",\n    \"message\": "
              << std::quoted(msg) << "\n  },\n  \"exit_code\": 2\n}\n";
  } else {
    std::cerr << "error: " << artin_status_string(st) << ": " << msg << "\n";
  }
  return 2;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"artin-cli: Artinian algebras over Q, differentials and truncated homomorphisms"};
  app.require_subcommand(1);
  Args a;
  auto *analyze = app.add_subcommand("analyze", "basis, socle, differentials and grading");
  add_common(analyze, a, false);
  auto *homs = app.add_subcommand("homs", "search for homomorphisms into Q[t]/(t^(N+1))");
  add_common(homs, a, true);
  auto *critdeg = app.add_subcommand("critdeg", "critical degree bounds");
  add_common(critdeg, a, true);
  auto *tau = app.add_subcommand("tau", "check that homomorphisms kill a torsion witness form");
  add_common(tau, a, true);
  tau->add_option("--witness", a.witness, "element w; checks d(w)");
  tau->add_option("--r", a.r, "use this r instead of the critical degree");
  auto *socle = app.add_subcommand("socle-kill", "check that homomorphisms kill d(socle)");
  add_common(socle, a, true);

  CLI11_PARSE(app, argc, argv);
  std::string command = app.get_subcommands().front()->get_name();

  std::ifstream in(a.file);
  if (!in)
    return fail_early(a, command, ARTIN_E_INVALID_ARGUMENT, "cannot read " + a.file);
  std::stringstream buf;
  buf << in.rdbuf();

  artin_algebra *alg = nullptr;
  artin_status st = artin_algebra_parse(buf.str().c_str(), &alg);
  if (st != ARTIN_OK)
    return fail_early(a, command, st, artin_last_error());

  artin_run_options opts;
  artin_run_options_init(&opts);
  opts.nmax = a.nmax;
  opts.budget = a.budget;
  opts.seed = a.seed;
  opts.r = a.r;
  if (!a.strategy.empty())
    opts.strategy = a.strategy.c_str();
  if (!a.witness.empty())
    opts.witness = a.witness.c_str();
  if (!a.images.empty())
    opts.images = a.images.c_str();

  artin_report *report = nullptr;
  st = artin_run(alg, command.c_str(), &opts, &report);
  if (st != ARTIN_OK) {
    std::string msg = artin_last_error();
    artin_algebra_free(alg);
    return fail_early(a, command, st, msg);
  }
  std::cout << (a.json ? artin_report_json(report) : artin_report_text(report));
  int code = artin_report_exit_code(report);
  artin_report_free(report);
  artin_algebra_free(alg);
  return code;
}
